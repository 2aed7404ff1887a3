#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthoproof {

using Element = std::size_t;
inline constexpr Element kNoElement = static_cast<Element>(-1);

struct OmlFailure {
    std::string axiom;
    std::vector<Element> elements;
    std::string message;
};

// Finite orthomodular lattice over dense indices 0..n-1. Tables are built
// from the order at construction; a structure that is not a lattice keeps
// kNoElement entries, which verify_oml reports.
class FiniteOML {
public:
    FiniteOML() = default;
    static FiniteOML from_order(std::string name, std::vector<std::string> element_names,
                                std::vector<std::vector<bool>> leq, std::vector<Element> neg);

    const std::string& name() const { return name_; }
    std::size_t size() const { return n_; }
    Element bottom() const { return bottom_; }
    Element top() const { return top_; }
    bool leq(Element a, Element b) const { return leq_[a * n_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
    Element join(Element a, Element b) const { return join_[a * n_ + b]; }
    // (a v ~b) ^ b
    Element sasaki_and(Element a, Element b) const { return sasaki_and_[a * n_ + b]; }
    // ~a v (a ^ b)
    Element sasaki_arrow(Element a, Element b) const { return sasaki_arrow_[a * n_ + b]; }

    const std::string& element_name(Element a) const { return names_[a]; }
    std::optional<Element> find(const std::string& element_name) const;

    const std::vector<Element>& generators() const { return generators_; }
    FiniteOML& with_generators(std::vector<Element> g);
    FiniteOML& renamed(std::string name);

private:
    friend std::optional<OmlFailure> verify_oml(const FiniteOML& L);

    std::string name_;
    std::size_t n_ = 0;
    std::vector<std::string> names_;
    std::vector<bool> leq_;
    std::vector<Element> neg_, meet_, join_, sasaki_and_, sasaki_arrow_;
    Element bottom_ = kNoElement, top_ = kNoElement;
    std::vector<Element> generators_;
};

// nullopt when every orthomodular lattice axiom holds.
std::optional<OmlFailure> verify_oml(const FiniteOML& L);

FiniteOML boolean(std::size_t k);
FiniteOML mo(std::size_t m);
FiniteOML product(const FiniteOML& a, const FiniteOML& b);
// 2^4 x MO2 with a generating pair attached as generators().
FiniteOML free_oml2();

std::vector<Element> generated_subalgebra(const FiniteOML& L, const std::vector<Element>& seeds);

// Lattice by the names accepted on the command line: 2, 2^2, MO2, 2xMO2, F2.
std::optional<FiniteOML> builtin_lattice(const std::string& name);
// The refutation battery in search order.
const std::vector<FiniteOML>& battery();

class LatticeFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reads the "oml N / leq I J / neg I J" format; rejects structures that fail
// verify_oml.
FiniteOML parse_lattice(const std::string& text, const std::string& name = "file");
FiniteOML load_lattice(const std::string& path);

}  // namespace orthoproof
