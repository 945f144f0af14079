#pragma once

// Positive boolean formulas over an abstract atom type.
//
// A formula is an immutable tree of ConstTrue / ConstFalse / Atom leaves and
// n-ary All / Any nodes. There is no negation. Nodes are shared, so copying a
// formula is cheap and formulas may be read from several threads at once.

#include "osc/errors.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace osc {

enum class FormulaShape { atomic, constant, disjunctive, conjunctive, general };

const char* to_string(FormulaShape s);

template <class Atom>
class Pbf {
public:
    enum class Kind { constant_true, constant_false, atom, all, any };

    using atom_type = Atom;

    static Pbf truth() { return Pbf(std::make_shared<const Node>(Node{Kind::constant_true, {}, {}})); }
    static Pbf falsity() { return Pbf(std::make_shared<const Node>(Node{Kind::constant_false, {}, {}})); }
    static Pbf atom(Atom a) { return Pbf(std::make_shared<const Node>(Node{Kind::atom, std::move(a), {}})); }

    static Pbf all(std::vector<Pbf> children) { return node(Kind::all, std::move(children)); }
    static Pbf any(std::vector<Pbf> children) { return node(Kind::any, std::move(children)); }

    // Default-constructed formulas are ConstFalse.
    Pbf() : Pbf(falsity()) {}

    Kind kind() const { return node_->kind; }
    bool is_atom() const { return node_->kind == Kind::atom; }
    bool is_constant() const {
        return node_->kind == Kind::constant_true || node_->kind == Kind::constant_false;
    }
    const Atom& atom_value() const {
        if (!is_atom())
            throw contract_error("atom_value() on a non-atomic formula");
        return *node_->atom;
    }
    std::span<const Pbf> children() const { return node_->children; }

    friend bool operator==(const Pbf& f, const Pbf& g) {
        if (f.node_ == g.node_)
            return true;
        if (f.kind() != g.kind())
            return false;
        switch (f.kind()) {
        case Kind::constant_true:
        case Kind::constant_false:
            return true;
        case Kind::atom:
            return *f.node_->atom == *g.node_->atom;
        default:
            return f.node_->children == g.node_->children;
        }
    }

private:
    struct Node {
        Kind kind;
        std::optional<Atom> atom;
        std::vector<Pbf> children;
    };

    explicit Pbf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Pbf node(Kind k, std::vector<Pbf> children) {
        if (children.empty())
            throw contract_error("All/Any require at least one child");
        return Pbf(std::make_shared<const Node>(Node{k, std::nullopt, std::move(children)}));
    }

    std::shared_ptr<const Node> node_;
};

// Evaluates f under a total assignment given as a callable Atom -> bool.
template <class Atom, class Assignment>
    requires std::is_invocable_r_v<bool, Assignment&, const Atom&>
bool eval(const Pbf<Atom>& f, Assignment&& value) {
    using K = typename Pbf<Atom>::Kind;
    switch (f.kind()) {
    case K::constant_true:
        return true;
    case K::constant_false:
        return false;
    case K::atom:
        return static_cast<bool>(value(f.atom_value()));
    case K::all:
        for (const auto& c : f.children())
            if (!eval(c, value))
                return false;
        return true;
    case K::any:
        for (const auto& c : f.children())
            if (eval(c, value))
                return true;
        return false;
    }
    return false;
}

template <class Atom>
bool eval(const Pbf<Atom>& f, const std::map<Atom, bool>& assignment) {
    return eval(f, [&](const Atom& a) {
        auto it = assignment.find(a);
        if (it == assignment.end())
            throw contract_error("assignment is missing an atom of the formula");
        return it->second;
    });
}

// Calls visit(atom) for every atom leaf, left to right, repeats included.
template <class Atom, class Visit>
void visit_atoms(const Pbf<Atom>& f, Visit&& visit) {
    if (f.is_atom()) {
        visit(f.atom_value());
        return;
    }
    for (const auto& c : f.children())
        visit_atoms(c, visit);
}

template <class Atom>
std::set<Atom> atoms(const Pbf<Atom>& f) {
    std::set<Atom> out;
    visit_atoms(f, [&](const Atom& a) { out.insert(a); });
    return out;
}

// Replaces every atom x by image(x); image returns a Pbf over any atom type.
template <class Atom, class Image>
auto substitute(const Pbf<Atom>& f, Image&& image) -> std::invoke_result_t<Image&, const Atom&> {
    using Out = std::invoke_result_t<Image&, const Atom&>;
    using K = typename Pbf<Atom>::Kind;
    switch (f.kind()) {
    case K::constant_true:
        return Out::truth();
    case K::constant_false:
        return Out::falsity();
    case K::atom:
        return image(f.atom_value());
    default: {
        std::vector<Out> kids;
        kids.reserve(f.children().size());
        for (const auto& c : f.children())
            kids.push_back(substitute(c, image));
        return f.kind() == K::all ? Out::all(std::move(kids)) : Out::any(std::move(kids));
    }
    }
}

template <class Atom>
FormulaShape classify(const Pbf<Atom>& f) {
    using K = typename Pbf<Atom>::Kind;
    switch (f.kind()) {
    case K::atom:
        return FormulaShape::atomic;
    case K::constant_true:
    case K::constant_false:
        return FormulaShape::constant;
    default:
        break;
    }
    for (const auto& c : f.children())
        if (!(c.is_atom() || c.is_constant()))
            return FormulaShape::general;
    return f.kind() == K::any ? FormulaShape::disjunctive : FormulaShape::conjunctive;
}

// Debug rendering: `&` for All, `|` for Any, T/F for constants.
template <class Atom, class Name>
std::string render(const Pbf<Atom>& f, Name&& name) {
    using K = typename Pbf<Atom>::Kind;
    switch (f.kind()) {
    case K::constant_true:
        return "T";
    case K::constant_false:
        return "F";
    case K::atom:
        return name(f.atom_value());
    default:
        break;
    }
    if (f.children().size() == 1)
        return render(f.children()[0], name);
    std::string out = "(";
    const char* op = f.kind() == K::all ? " & " : " | ";
    bool first = true;
    for (const auto& c : f.children()) {
        if (!first)
            out += op;
        out += render(c, name);
        first = false;
    }
    return out + ")";
}

} // namespace osc
