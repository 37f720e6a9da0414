#include "galois_moebius/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>

#include "galois_moebius/errors.hpp"

namespace gm {

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

PolyRing::PolyRing(FieldTower tower, Level level) : tower_(std::move(tower)), level_(level) {}

Poly PolyRing::monomial(Elem a, std::size_t k) const {
    std::vector<Elem> c(k + 1, tower_.zero());
    c[k] = a;
    return Poly(std::move(c));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
    std::vector<Elem> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = tower_.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const {
    std::vector<Elem> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = tower_.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly PolyRing::neg(const Poly& a) const {
    std::vector<Elem> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = tower_.neg(a.c[i]);
    return Poly(std::move(c));
}

Poly PolyRing::scale(const Poly& a, Elem s) const {
    if (s.code == 0) return {};
    std::vector<Elem> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = tower_.mul(a.c[i], s);
    return Poly(std::move(c));
}

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> c(a.c.size() + b.c.size() - 1, tower_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const Elem ai = a.c[i];
        if (ai.code == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = tower_.add(c[i + j], tower_.mul(ai, b.c[j]));
    }
    return Poly(std::move(c));
}

Poly PolyRing::sqr(const Poly& a) const {
    if (tower_.p() != 2 || a.is_zero()) return mul(a, a);
    // Cross terms vanish in characteristic 2.
    std::vector<Elem> c(2 * a.c.size() - 1, tower_.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[2 * i] = tower_.mul(a.c[i], a.c[i]);
    return Poly(std::move(c));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Elem> r = a.c;
    const std::size_t db = b.c.size() - 1;
    std::vector<Elem> quot(r.size() - db, tower_.zero());
    const Elem lead_inv = tower_.inv(b.lead());
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].code == 0) continue;
        const Elem coef = tower_.mul(r[k], lead_inv);
        quot[k - db] = coef;
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = tower_.sub(r[k - db + i], tower_.mul(coef, b.c[i]));
    }
    r.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly PolyRing::rem(const Poly& a, const Poly& b) const {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<Elem> r = a.c;
    const std::size_t db = b.c.size() - 1;
    const Elem lead_inv = tower_.inv(b.lead());
    const bool monic_divisor = b.lead() == tower_.one();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].code == 0) continue;
        const Elem coef = monic_divisor ? r[k] : tower_.mul(r[k], lead_inv);
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = tower_.sub(r[k - db + i], tower_.mul(coef, b.c[i]));
    }
    r.resize(db);
    return Poly(std::move(r));
}

Poly PolyRing::monic(const Poly& f) const {
    if (f.is_zero()) return f;
    return scale(f, tower_.inv(f.lead()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

PolyRing::Bezout PolyRing::xgcd(const Poly& a, const Poly& b) const {
    Poly r0 = a, r1 = b;
    Poly s0 = one(), s1 = zero();
    Poly t0 = zero(), t1 = one();
    while (!r1.is_zero()) {
        auto [quot, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(quot, s1));
        Poly t = sub(t0, mul(quot, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem li = tower_.inv(r0.lead());
    return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

Poly PolyRing::derivative(const Poly& f) const {
    if (f.c.size() <= 1) return {};
    std::vector<Elem> c(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i)
        c[i - 1] = tower_.mul(f.c[i], tower_.from_int(static_cast<std::int64_t>(i % tower_.p())));
    return Poly(std::move(c));
}

Elem PolyRing::eval(const Poly& f, Elem a) const {
    Elem r = tower_.zero();
    for (std::size_t i = f.c.size(); i-- > 0;) r = tower_.add(tower_.mul(r, a), f.c[i]);
    return r;
}

Poly PolyRing::powmod(const Poly& f, u64 k, const Poly& m) const {
    Poly result = rem(one(), m);
    Poly base = rem(f, m);
    while (k) {
        if (k & 1) result = mulmod(result, base, m);
        k >>= 1;
        if (k) base = rem(sqr(base), m);
    }
    return result;
}

Poly PolyRing::power_of_x_mod(u64 k, const Poly& m) const { return powmod(x(), k, m); }

Poly PolyRing::pth_root(const Poly& f) const {
    const u64 p = tower_.p();
    const u64 root_exp = field_size() / p;
    std::vector<Elem> c;
    for (std::size_t i = 0; i < f.c.size(); i += p) c.push_back(tower_.pow(f.c[i], root_exp));
    return Poly(std::move(c));
}

bool PolyRing::is_irreducible(const Poly& f) const {
    const int k = f.degree();
    if (k < 1) return false;
    if (k == 1) return true;
    if (f.c[0].code == 0) return false;
    const Poly m = monic(f);
    const u64 Q = field_size();
    const auto primes = prime_divisors(static_cast<u64>(k));
    // x^{Q^i} mod m for i = 1..k
    std::vector<Poly> frob_powers;
    frob_powers.reserve(static_cast<std::size_t>(k));
    Poly h = rem(x(), m);
    for (int i = 1; i <= k; ++i) {
        h = powmod(h, Q, m);
        frob_powers.push_back(h);
    }
    if (frob_powers.back() != rem(x(), m)) return false;
    for (u64 l : primes) {
        const Poly& hk = frob_powers[static_cast<std::size_t>(k / static_cast<int>(l)) - 1];
        if (gcd(sub(hk, x()), m).degree() != 0) return false;
    }
    return true;
}

std::vector<Factor> PolyRing::squarefree(const Poly& f) const {
    std::vector<Factor> out;
    if (f.degree() < 1) return out;
    const Poly m = monic(f);
    const Poly d = derivative(m);
    const unsigned p = static_cast<unsigned>(tower_.p());
    if (d.is_zero()) {
        for (const auto& fac : squarefree(pth_root(m))) out.push_back({fac.poly, fac.multiplicity * p});
        return out;
    }
    Poly c = gcd(m, d);
    Poly w = quo(m, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = quo(w, y);
        if (z.degree() > 0) out.push_back({monic(z), i});
        ++i;
        w = std::move(y);
        c = quo(c, w);
    }
    if (c.degree() > 0) {
        for (const auto& fac : squarefree(pth_root(monic(c)))) out.push_back({fac.poly, fac.multiplicity * p});
    }
    return out;
}

std::vector<std::pair<Poly, unsigned>> PolyRing::distinct_degree(const Poly& f, unsigned max_degree) const {
    std::vector<std::pair<Poly, unsigned>> out;
    Poly rest = monic(f);
    const u64 Q = field_size();
    Poly h = rem(x(), rest);
    unsigned i = 1;
    for (; 2 * static_cast<int>(i) <= rest.degree(); ++i) {
        if (max_degree && i > max_degree) return out;
        h = powmod(h, Q, rest);
        Poly g = gcd(sub(h, x()), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            rest = quo(rest, g);
            h = rem(h, rest);
        }
    }
    // Whatever is left has no factor of degree below i, so it is irreducible.
    if (rest.degree() > 0 && (!max_degree || rest.degree() <= static_cast<int>(max_degree)))
        out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

std::vector<Factor> PolyRing::factors_of_degree(const Poly& f, unsigned k, u64 seed) const {
    std::vector<Factor> out;
    if (f.degree() < static_cast<int>(k)) return out;
    std::mt19937_64 rng(seed);
    for (const auto& sq : squarefree(f)) {
        for (const auto& [part, d] : distinct_degree(sq.poly, k)) {
            if (d != k) continue;
            for (auto& g : equal_degree(part, d, rng)) out.push_back({std::move(g), sq.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

std::vector<Poly> PolyRing::equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng) const {
    if (f.degree() == static_cast<int>(d)) return {monic(f)};
    const u64 Q = field_size();
    const int n = f.degree();
    std::uniform_int_distribution<u64> coeff(0, Q - 1);
    while (true) {
        std::vector<Elem> c(static_cast<std::size_t>(n));
        for (auto& x : c) x = Elem{static_cast<std::uint32_t>(coeff(rng))};
        Poly a(std::move(c));
        if (a.degree() < 1) continue;
        Poly b;
        if (tower_.p() == 2) {
            // Absolute trace: sum of a^{2^i}, i < log2(Q) * d.
            const unsigned kappa = static_cast<unsigned>(std::countr_zero(Q)) * d;
            Poly term = rem(a, f);
            b = term;
            for (unsigned i = 1; i < kappa; ++i) {
                term = rem(sqr(term), f);
                b = add(b, term);
            }
        } else {
            // a^{(Q^d-1)/2} = (a^{1+Q+...+Q^{d-1}})^{(Q-1)/2}
            Poly term = rem(a, f);
            Poly norm = term;
            for (unsigned i = 1; i < d; ++i) {
                term = powmod(term, Q, f);
                norm = mulmod(norm, term, f);
            }
            b = sub(powmod(norm, (Q - 1) / 2, f), one());
        }
        Poly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < n) {
            auto left = equal_degree(g, d, rng);
            auto right = equal_degree(quo(f, g), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<Factor> PolyRing::factor(const Poly& f, u64 seed) const {
    std::vector<Factor> out;
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    for (const auto& sq : squarefree(f)) {
        for (const auto& [part, d] : distinct_degree(sq.poly)) {
            for (auto& g : equal_degree(part, d, rng)) out.push_back({std::move(g), sq.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

Poly PolyRing::sigma(const Poly& f, std::int64_t i) const {
    std::vector<Elem> c(f.c.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = tower_.frobenius(f.c[k], i);
    return Poly(std::move(c));
}

Poly PolyRing::reciprocal(const Poly& f) const {
    if (f.is_zero() || f.c[0].code == 0) fail(ErrorKind::ZeroConstantTerm, "reciprocal needs f(0) != 0");
    std::vector<Elem> c(f.c.rbegin(), f.c.rend());
    return scale(Poly(std::move(c)), tower_.inv(f.c[0]));
}

unsigned PolyRing::min_subfield_degree(const Poly& f) const {
    for (u64 t : divisors(tower_.n()))
        if (sigma(f, static_cast<std::int64_t>(t)) == f) return static_cast<unsigned>(t);
    return tower_.n();
}

bool PolyRing::in_level(const Poly& f, Level level) const {
    return std::all_of(f.c.begin(), f.c.end(), [&](Elem a) { return tower_.in_level(a, level); });
}

std::string PolyRing::format(const Poly& f) const {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i) out += ',';
        out += tower_.format(f.c[i]);
    }
    return out;
}

Poly PolyRing::parse(std::string_view text) const {
    std::vector<Elem> c;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        auto piece = text.substr(start, end - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        if (piece.empty()) fail(ErrorKind::Parse, "empty coefficient in polynomial '" + std::string(text) + "'");
        const Elem a = tower_.parse(piece);
        if (!tower_.in_level(a, level_)) fail(ErrorKind::LevelMismatch, "coefficient outside the ring's field");
        c.push_back(a);
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '[') ++depth;
        if (text[i] == ']') --depth;
        if (depth < 0) fail(ErrorKind::Parse, "unbalanced brackets in polynomial");
        if (text[i] == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    if (depth != 0) fail(ErrorKind::Parse, "unbalanced brackets in polynomial");
    flush(text.size());
    return Poly(std::move(c));
}

u64 count_irreducibles(u64 field_size, unsigned k) {
    if (k < 1) fail(ErrorKind::DegreeTooSmall, "degree must be positive");
    __int128 sum = 0;
    for (u64 d : divisors(k)) sum += static_cast<__int128>(moebius_mu(d)) * checked_pow(field_size, static_cast<unsigned>(k / d));
    return static_cast<u64>(sum / k);
}

MonicIrreducibleStream::MonicIrreducibleStream(const PolyRing& ring, unsigned k)
    : ring_(ring), k_(k), radix_(ring.field_size()), digits_(k, 0) {
    if (k < 1) fail(ErrorKind::DegreeTooSmall, "degree must be positive");
}

bool MonicIrreducibleStream::advance() {
    if (!started_) {
        started_ = true;
        return true;
    }
    for (unsigned i = 0; i < k_; ++i) {
        if (++digits_[i] < radix_) return true;
        digits_[i] = 0;
    }
    return false;
}

std::optional<Poly> MonicIrreducibleStream::next() {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (k_ >= 2 && digits_[0] == 0) continue;
        std::vector<Elem> c(k_ + 1);
        for (unsigned i = 0; i < k_; ++i) c[i] = Elem{digits_[i]};
        c[k_] = Elem{1};
        Poly f(std::move(c));
        if (ring_.is_irreducible(f)) return f;
    }
    return std::nullopt;
}

std::vector<Poly> monic_irreducibles(const PolyRing& ring, unsigned k) {
    std::vector<Poly> out;
    MonicIrreducibleStream stream(ring, k);
    while (auto f = stream.next()) out.push_back(std::move(*f));
    return out;
}

}  // namespace gm
