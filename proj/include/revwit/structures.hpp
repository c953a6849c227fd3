#pragma once

#include <utility>
#include <vector>

#include "revwit/big.hpp"
#include "revwit/rational.hpp"
#include "revwit/structure.hpp"

namespace revwit {

// ---- shared rep helpers ----

// Positions of set bits, ascending.
std::vector<long long> bits_of(Big x);
Big bitcode_of(const std::vector<long long>& members);

// Positive integers under divisibility; at(n) = n+1.
class DivisibilityStructure : public Structure {
public:
    std::string id() const override { return "divisibility"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    std::vector<Element> principal_ideal(const Element& x) const override;
    Element upper_bound(const std::vector<Element>& xs) const override;
    Element strict_upper_bound(const std::vector<Element>& xs) const override;
    Element fresh_min_avoiding(const SkipFn& skip) const override;
    using Structure::fresh_min_avoiding;
    bool in_minimal_layer(const Element& x) const override;
    std::vector<std::pair<Element, Element>> embed_ideal_above(const Element& a,
                                                               const Element& p) const override;
    static Big value(const Element& e);

protected:
    void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const override;
};

// Finite subsets of the naturals under inclusion; at(n) has bitcode n.
class FiniteSetsStructure : public Structure {
public:
    std::string id() const override { return "finite-sets"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    std::vector<Element> principal_ideal(const Element& x) const override;
    Element upper_bound(const std::vector<Element>& xs) const override;
    Element strict_upper_bound(const std::vector<Element>& xs) const override;
    Element fresh_min_avoiding(const SkipFn& skip) const override;
    using Structure::fresh_min_avoiding;
    bool in_minimal_layer(const Element& x) const override;
    std::vector<std::pair<Element, Element>> embed_ideal_above(const Element& a,
                                                               const Element& p) const override;
    static std::vector<long long> members(const Element& e);
    static Element make(const std::vector<long long>& members);

protected:
    void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const override;
};

// Finite subsets whose size lies in a fixed set A (0 in A); ordered by the
// enumeration of admissible bitcodes.
class LevelRestrictedStructure : public Structure {
public:
    // spec: "" / "all" / "even" / "mod:m:r1|r2|..."
    explicit LevelRestrictedStructure(const std::string& level_spec);
    std::string id() const override { return id_; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    std::vector<Element> principal_ideal(const Element& x) const override;
    Element upper_bound(const std::vector<Element>& xs) const override;
    Element strict_upper_bound(const std::vector<Element>& xs) const override;
    Element fresh_min_avoiding(const SkipFn& skip) const override;
    using Structure::fresh_min_avoiding;
    bool in_minimal_layer(const Element& x) const override;
    bool admissible_size(long long k) const;
    // Least admissible size strictly above k.
    long long next_size(long long k) const;
    static std::vector<long long> members(const Element& e);

protected:
    void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const override;

private:
    Element make(const std::vector<long long>& members) const;
    Big index_of(const std::vector<long long>& members) const;
    std::string id_;
    std::string spec_;
    long long mod_ = 0;                  // 0 = all sizes
    std::vector<long long> residues_;
};

// Finite partial functions omega -> omega (fn-omega) and finite-support
// functions omega -> omega\{0} (fin-support), both ordered by domain
// inclusion plus pointwise <= on shared keys.  Coded as key-sorted
// (key, value) entry lists; fin-support entries have value >= 1.
class FnStructure : public Structure {
public:
    explicit FnStructure(bool fin_support) : fin_(fin_support) {}
    std::string id() const override { return fin_ ? "fin-support" : "fn-omega"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    std::vector<Element> principal_ideal(const Element& x) const override;
    Element upper_bound(const std::vector<Element>& xs) const override;
    Element strict_upper_bound(const std::vector<Element>& xs) const override;
    Element fresh_min_avoiding(const SkipFn& skip) const override;
    using Structure::fresh_min_avoiding;
    bool in_minimal_layer(const Element& x) const override;
    std::vector<std::pair<Element, Element>> embed_ideal_above(const Element& a,
                                                               const Element& p) const override;
    using Rep = std::vector<std::pair<long long, Big>>;
    static Rep entries(const Element& e);
    Element make(const Rep& entries) const;

protected:
    void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const override;

private:
    bool fin_;
};

// {(m,n) in ZxZ : m+n >= 0} under the componentwise order; enumerated by
// diagonals d = m+n, zigzag within each diagonal.
class HalfPlaneStructure : public Structure {
public:
    std::string id() const override { return "half-plane"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    std::vector<Element> principal_ideal(const Element& x) const override;
    Element upper_bound(const std::vector<Element>& xs) const override;
    Element strict_upper_bound(const std::vector<Element>& xs) const override;
    Element fresh_min_avoiding(const SkipFn& skip) const override;
    using Structure::fresh_min_avoiding;
    bool in_minimal_layer(const Element& x) const override;
    std::vector<std::pair<Element, Element>> embed_ideal_above(const Element& a,
                                                               const Element& p) const override;
    static std::pair<Big, Big> coords(const Element& e);
    static Element make(const Big& m, const Big& n);

protected:
    void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const override;
};

// ZxZ under the componentwise order; square shells by max(|m|,|n|), zigzag-
// lexicographic within a shell.
class ZxzStructure : public Structure {
public:
    std::string id() const override { return "zxz"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    Element upper_bound(const std::vector<Element>& xs) const override;
    Element strict_upper_bound(const std::vector<Element>& xs) const override;
    static std::pair<Big, Big> coords(const Element& e);
    static Element make(const Big& m, const Big& n);
    static Big index_of(const Big& m, const Big& n);

protected:
    void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const override;
};

// QxQ under the componentwise order; pairing of the rational enumeration.
class QxqStructure : public Structure {
public:
    std::string id() const override { return "qxq"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    Element upper_bound(const std::vector<Element>& xs) const override;
    Element strict_upper_bound(const std::vector<Element>& xs) const override;
    static std::pair<Rat, Rat> coords(const Element& e);
    static Element make(const Rat& x, const Rat& y);

protected:
    void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const override;
};

// divisibility x Z, componentwise; used by the product lift.
class ProductDivZStructure : public Structure {
public:
    std::string id() const override { return "product(divisibility,z)"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    static std::pair<Big, Big> coords(const Element& e);
    static Element make(const Big& d, const Big& z);
};

// ---- plane translation witnesses ----

// Corner incomparable to the whole closed box [p, q]: (p0 - 1, q1 + 1).
Element zxz_incomparable_to_box(const Element& p, const Element& q);
Element qxq_incomparable_to_box(const Element& p, const Element& q);

// Translation vector moving the closed interval [p, q] entirely below
// (direction "below": add r - q) or entirely above (direction "above": add
// r - p) the reference point r.  Returned as a pair element of the plane.
Element zxz_interval_translation(const Element& p, const Element& q,
                                 const std::string& direction, const Element& r);
Element qxq_interval_translation(const Element& p, const Element& q,
                                 const std::string& direction, const Element& r);

}  // namespace revwit
