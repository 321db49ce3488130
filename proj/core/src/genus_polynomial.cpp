#include "rgt/genus_polynomial.hpp"

#include <sstream>

namespace rgt {

GenusPolynomial GenusPolynomial::constant(Int c) {
    return monomial(0, std::move(c));
}

GenusPolynomial GenusPolynomial::monomial(unsigned exponent, Int coefficient) {
    GenusPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

GenusPolynomial GenusPolynomial::of(
    std::initializer_list<std::pair<unsigned, long long>> terms) {
    GenusPolynomial p;
    for (const auto& [e, c] : terms) p.add_term(e, Int(c));
    return p;
}

void GenusPolynomial::add_term(unsigned exponent, const Int& coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coefficient);
    } else {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

GenusPolynomial::Int GenusPolynomial::coefficient(unsigned exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

unsigned GenusPolynomial::degree() const {
    if (terms_.empty())
        throw PreconditionError("degree of the zero polynomial is undefined");
    return terms_.rbegin()->first;
}

GenusPolynomial& GenusPolynomial::operator+=(const GenusPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

GenusPolynomial GenusPolynomial::operator*(const GenusPolynomial& rhs) const {
    GenusPolynomial p;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) p.add_term(ea + eb, ca * cb);
    return p;
}

GenusPolynomial GenusPolynomial::scale_monomial(unsigned exponent,
                                                const Int& coefficient) const {
    GenusPolynomial p;
    for (const auto& [e, c] : terms_) p.add_term(e + exponent, c * coefficient);
    return p;
}

GenusPolynomial::Int GenusPolynomial::evaluate(const Int& z) const {
    // Horner over the sparse terms, descending
    Int acc = 0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        acc += it->second;
        const unsigned lower =
            (std::next(it) == terms_.rend()) ? 0 : std::next(it)->first;
        for (unsigned k = lower; k < it->first; ++k) acc *= z;
    }
    return acc;
}

std::vector<unsigned> GenusPolynomial::support() const {
    std::vector<unsigned> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

bool GenusPolynomial::is_even_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

bool GenusPolynomial::is_odd_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 == 0) return false;
    return true;
}

bool GenusPolynomial::is_interpolating() const {
    if (terms_.empty())
        throw PreconditionError("interpolation is undefined for the zero polynomial");
    const unsigned lo = terms_.begin()->first;
    const unsigned hi = terms_.rbegin()->first;
    return terms_.size() == static_cast<std::size_t>(hi - lo) + 1;
}

bool GenusPolynomial::is_even_interpolating() const {
    if (terms_.empty())
        throw PreconditionError("interpolation is undefined for the zero polynomial");
    if (!is_even_polynomial()) return false;
    const unsigned lo = terms_.begin()->first;
    const unsigned hi = terms_.rbegin()->first;
    return terms_.size() == static_cast<std::size_t>((hi - lo) / 2) + 1;
}

std::string GenusPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c;
        } else {
            out << c << "*z^" << e;
        }
    }
    return out.str();
}

}  // namespace rgt
