#include "galois_moebius/gf_tower.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "galois_moebius/errors.hpp"
#include "galois_moebius/poly.hpp"

namespace gm {

namespace {

// Schoolbook arithmetic on digit vectors, used once per tower to fill the tables.
class StructuralField {
public:
    StructuralField(u64 p, unsigned e, unsigned n, const std::vector<std::uint32_t>& g,
                    const std::vector<Elem>& h)
        : p_(p), e_(e), n_(n), g_(g) {
        q_ = checked_pow(p, e);
        for (const Elem& c : h) h_.push_back(decode_q(c.code));
    }

    u64 order() const { return checked_pow(q_, n_); }

    std::vector<std::uint32_t> decode_q(u64 code) const {
        std::vector<std::uint32_t> d(e_);
        for (auto& x : d) {
            x = static_cast<std::uint32_t>(code % p_);
            code /= p_;
        }
        return d;
    }
    u64 encode_q(const std::vector<std::uint32_t>& d) const {
        u64 code = 0;
        for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
        return code;
    }

    using Top = std::vector<std::vector<std::uint32_t>>;

    Top decode(u64 code) const {
        Top t(n_);
        for (auto& c : t) {
            c = decode_q(code % q_);
            code /= q_;
        }
        return t;
    }
    u64 encode(const Top& t) const {
        u64 code = 0;
        for (std::size_t j = t.size(); j-- > 0;) code = code * q_ + encode_q(t[j]);
        return code;
    }

    std::vector<std::uint32_t> add_q(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint32_t> r(e_);
        for (unsigned i = 0; i < e_; ++i) r[i] = static_cast<std::uint32_t>((a[i] + b[i]) % p_);
        return r;
    }
    std::vector<std::uint32_t> mul_q(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
        std::vector<u64> prod(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i)
            for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + u64{a[i]} * b[j]) % p_;
        for (unsigned k = 2 * e_ - 2; k >= e_; --k) {
            const u64 c = prod[k];
            if (c == 0) continue;
            for (unsigned i = 0; i < e_; ++i) prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - c) * g_[i]) % p_;
            prod[k] = 0;
        }
        std::vector<std::uint32_t> r(e_);
        for (unsigned i = 0; i < e_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
        return r;
    }
    std::vector<std::uint32_t> neg_q(const std::vector<std::uint32_t>& a) const {
        std::vector<std::uint32_t> r(e_);
        for (unsigned i = 0; i < e_; ++i) r[i] = static_cast<std::uint32_t>((p_ - a[i]) % p_);
        return r;
    }

    u64 mul(u64 x, u64 y) const {
        const Top a = decode(x), b = decode(y);
        Top prod(2 * n_ - 1, std::vector<std::uint32_t>(e_, 0));
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) prod[i + j] = add_q(prod[i + j], mul_q(a[i], b[j]));
        for (unsigned k = 2 * n_ - 2; k >= n_; --k) {
            const auto c = neg_q(prod[k]);
            for (unsigned j = 0; j < n_; ++j) prod[k - n_ + j] = add_q(prod[k - n_ + j], mul_q(c, h_[j]));
        }
        prod.resize(n_);
        return encode(prod);
    }

    u64 pow(u64 x, u64 k) const {
        u64 r = 1;
        while (k) {
            if (k & 1) r = mul(r, x);
            x = mul(x, x);
            k >>= 1;
        }
        return r;
    }

    u64 plus_one(u64 code) const {
        const u64 d0 = code % p_;
        return d0 == p_ - 1 ? code - d0 : code + 1;
    }

private:
    u64 p_;
    unsigned e_;
    unsigned n_;
    u64 q_;
    std::vector<std::uint32_t> g_;
    std::vector<std::vector<std::uint32_t>> h_;
};

Poly first_irreducible(const PolyRing& ring, unsigned degree) {
    MonicIrreducibleStream stream(ring, degree);
    auto f = stream.next();
    if (!f) fail(ErrorKind::NotFound, "no irreducible polynomial of degree " + std::to_string(degree));
    return *f;
}

}  // namespace

FieldTower::FieldTower(u64 p, unsigned e, unsigned n, std::vector<std::uint32_t> g, std::vector<Elem> h)
    : p_(p), e_(e), n_(n), g_(std::move(g)), h_(std::move(h)) {
    q_ = checked_pow(p, e);
    order_ = checked_pow(q_, n);
    qm1_ = order_ - 1;
    StructuralField sf(p_, e_, n_, g_, h_);

    auto tables = std::make_shared<Tables>();
    // Primitive element: smallest code whose order is Q - 1.
    const auto primes = prime_divisors(qm1_);
    u64 gen = 1;
    if (qm1_ > 1) {
        for (gen = 2; gen < order_; ++gen) {
            bool primitive = true;
            for (u64 l : primes) {
                if (sf.pow(gen, qm1_ / l) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) break;
        }
        if (gen == order_) fail(ErrorKind::ReducibleModulus, "no primitive element; moduli are not irreducible");
    }

    tables->log.assign(order_, 0);
    tables->exp.assign(2 * qm1_, 0);
    u64 x = 1;
    for (u64 i = 0; i < qm1_; ++i) {
        if (i > 0 && x == 1) fail(ErrorKind::ReducibleModulus, "moduli are not irreducible");
        tables->exp[i] = static_cast<std::uint32_t>(x);
        tables->exp[i + qm1_] = static_cast<std::uint32_t>(x);
        tables->log[x] = static_cast<std::uint32_t>(i);
        x = sf.mul(x, gen);
    }
    if (p_ != 2) {
        tables->zech.assign(qm1_, -1);
        for (u64 k = 0; k < qm1_; ++k) {
            const u64 s = sf.plus_one(tables->exp[k]);
            tables->zech[k] = s == 0 ? -1 : static_cast<std::int64_t>(tables->log[s]);
        }
    }
    tables->frob_exp.resize(n_);
    u64 f = 1 % std::max<u64>(qm1_, 1);
    for (unsigned i = 0; i < n_; ++i) {
        tables->frob_exp[i] = f;
        f = mul_mod(f, q_, std::max<u64>(qm1_, 1));
    }
    t_ = std::move(tables);
}

FieldTower FieldTower::build(u64 p, unsigned e, unsigned n, std::optional<std::vector<std::uint32_t>> g,
                             std::optional<std::vector<Elem>> h) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1 || n < 1) fail(ErrorKind::DegreeMismatch, "extension degrees must be positive");
    if (p > kMaxOrder) fail(ErrorKind::FieldTooLarge, "characteristic too large");
    u64 order = 1;
    for (unsigned i = 0; i < e * n; ++i) {
        order *= p;
        if (order > kMaxOrder)
            fail(ErrorKind::FieldTooLarge, "field order exceeds " + std::to_string(kMaxOrder));
    }

    const FieldTower prime(p, 1, 1, {0, 1}, {Elem{0}, Elem{1}});
    std::vector<std::uint32_t> g_mod;
    if (g) {
        if (g->size() != e + 1 || g->back() != 1)
            fail(ErrorKind::DegreeMismatch, "g must be monic of degree " + std::to_string(e));
        for (auto d : *g)
            if (d >= p) fail(ErrorKind::Parse, "modulus digit out of range");
        std::vector<Elem> c;
        for (auto d : *g) c.push_back(Elem{d});
        if (!PolyRing(prime).is_irreducible(Poly(c))) fail(ErrorKind::ReducibleModulus, "g is reducible");
        g_mod = *g;
    } else if (e == 1) {
        g_mod = {0, 1};
    } else {
        for (const Elem& c : first_irreducible(PolyRing(prime), e).c) g_mod.push_back(c.code);
    }

    const FieldTower base(p, e, 1, g_mod, {Elem{0}, Elem{1}});
    std::vector<Elem> h_mod;
    if (h) {
        if (h->size() != n + 1 || h->back() != Elem{1})
            fail(ErrorKind::DegreeMismatch, "h must be monic of degree " + std::to_string(n));
        for (const Elem& c : *h)
            if (c.code >= base.q()) fail(ErrorKind::LevelMismatch, "h must have coefficients in F_q");
        if (!PolyRing(base).is_irreducible(Poly(*h))) fail(ErrorKind::ReducibleModulus, "h is reducible");
        h_mod = *h;
    } else if (n == 1) {
        h_mod = {Elem{0}, Elem{1}};
    } else {
        h_mod = first_irreducible(PolyRing(base), n).c;
    }
    return FieldTower(p, e, n, std::move(g_mod), std::move(h_mod));
}

u64 FieldTower::size(Level level) const {
    switch (level) {
        case Level::Prime: return p_;
        case Level::Base: return q_;
        case Level::Top: return order_;
    }
    return order_;
}

Elem FieldTower::from_int(std::int64_t k) const {
    const auto pp = static_cast<std::int64_t>(p_);
    return Elem{static_cast<std::uint32_t>(((k % pp) + pp) % pp)};
}

Elem FieldTower::inv(Elem a) const {
    if (a.code == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    const u64 la = t_->log[a.code];
    return Elem{t_->exp[la == 0 ? 0 : qm1_ - la]};
}

unsigned FieldTower::subfield_degree(Elem a) const {
    for (u64 t : divisors(n_))
        if (frobenius(a, static_cast<std::int64_t>(t)) == a) return static_cast<unsigned>(t);
    return n_;
}

u64 FieldTower::log(Elem a) const {
    if (a.code == 0) fail(ErrorKind::DivisionByZero, "logarithm of zero");
    return t_->log[a.code];
}

u64 FieldTower::mult_order(Elem a) const {
    const u64 la = log(a);
    return qm1_ / std::gcd(la, qm1_);
}

std::vector<std::vector<std::uint32_t>> FieldTower::digits(Elem a) const {
    std::vector<std::vector<std::uint32_t>> out(n_, std::vector<std::uint32_t>(e_));
    u64 code = a.code;
    for (auto& c : out)
        for (auto& d : c) {
            d = static_cast<std::uint32_t>(code % p_);
            code /= p_;
        }
    return out;
}

Elem FieldTower::from_digits(const std::vector<std::vector<std::uint32_t>>& d) const {
    if (d.size() != n_) fail(ErrorKind::Parse, "expected " + std::to_string(n_) + " coefficient lists");
    u64 code = 0;
    for (std::size_t j = d.size(); j-- > 0;) {
        if (d[j].size() != e_) fail(ErrorKind::Parse, "expected " + std::to_string(e_) + " digits per coefficient");
        for (std::size_t i = d[j].size(); i-- > 0;) {
            if (d[j][i] >= p_) fail(ErrorKind::Parse, "digit out of range");
            code = code * p_ + d[j][i];
        }
    }
    return Elem{static_cast<std::uint32_t>(code)};
}

std::string FieldTower::format_brackets(Elem a) const {
    const auto d = digits(a);
    std::ostringstream os;
    auto list = [&](const std::vector<std::uint32_t>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ']';
    };
    if (e_ == 1) {
        std::vector<std::uint32_t> flat;
        for (const auto& c : d) flat.push_back(c[0]);
        list(flat);
    } else {
        os << '[';
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (j) os << ',';
            list(d[j]);
        }
        os << ']';
    }
    return os.str();
}

std::string FieldTower::format(Elem a) const {
    if (a.code < p_) return std::to_string(a.code);
    return format_brackets(a);
}

namespace {

struct Node {
    bool is_int = false;
    u64 value = 0;
    std::vector<Node> kids;
};

class ElemParser {
public:
    explicit ElemParser(std::string_view s) : s_(s) {}

    Node parse_all() {
        Node n = parse_node();
        skip_ws();
        if (pos_ != s_.size()) fail(ErrorKind::Parse, "trailing characters in element '" + std::string(s_) + "'");
        return n;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    Node parse_node() {
        skip_ws();
        if (pos_ >= s_.size()) fail(ErrorKind::Parse, "unexpected end of element '" + std::string(s_) + "'");
        Node n;
        if (s_[pos_] == '[') {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == ']') fail(ErrorKind::Parse, "empty list in element");
            while (true) {
                n.kids.push_back(parse_node());
                skip_ws();
                if (pos_ >= s_.size()) fail(ErrorKind::Parse, "unterminated list in element");
                if (s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (s_[pos_] == ']') {
                    ++pos_;
                    break;
                }
                fail(ErrorKind::Parse, "unexpected character in element '" + std::string(s_) + "'");
            }
            return n;
        }
        if (!std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(ErrorKind::Parse, "expected digit or '[' in element '" + std::string(s_) + "'");
        n.is_int = true;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n.value = n.value * 10 + static_cast<u64>(s_[pos_] - '0');
            if (n.value > (u64{1} << 40)) fail(ErrorKind::Parse, "integer too large");
            ++pos_;
        }
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

bool all_ints(const Node& n) {
    for (const auto& k : n.kids)
        if (!k.is_int) return false;
    return true;
}

}  // namespace

Elem FieldTower::parse(std::string_view text) const {
    const Node root = ElemParser(text).parse_all();
    auto digit = [&](const Node& n) -> std::uint32_t {
        if (!n.is_int) fail(ErrorKind::Parse, "expected an integer digit");
        if (n.value >= p_) fail(ErrorKind::Parse, "digit " + std::to_string(n.value) + " out of range for p=" + std::to_string(p_));
        return static_cast<std::uint32_t>(n.value);
    };
    auto base_coeff = [&](const Node& n) {
        std::vector<std::uint32_t> c(e_, 0);
        if (n.is_int) {
            c[0] = digit(n);
        } else {
            if (n.kids.size() != e_) fail(ErrorKind::Parse, "F_q coefficient needs " + std::to_string(e_) + " digits");
            for (unsigned i = 0; i < e_; ++i) c[i] = digit(n.kids[i]);
        }
        return c;
    };

    std::vector<std::vector<std::uint32_t>> d(n_, std::vector<std::uint32_t>(e_, 0));
    if (root.is_int) {
        d[0][0] = digit(root);
    } else if (all_ints(root) && e_ > 1) {
        if (root.kids.size() != e_) fail(ErrorKind::Parse, "F_q element needs " + std::to_string(e_) + " digits");
        d[0] = base_coeff(root);
    } else {
        if (root.kids.size() != n_)
            fail(ErrorKind::Parse, "element needs " + std::to_string(n_) + " coefficients over F_q");
        for (unsigned j = 0; j < n_; ++j) d[j] = base_coeff(root.kids[j]);
    }
    return from_digits(d);
}

}  // namespace gm
