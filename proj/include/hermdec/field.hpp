/**
 * @file field.hpp
 * @brief Exact arithmetic in GF(q^2) for prime-power q.
 *
 * Elements are stored as indices into a fixed enumeration of the field:
 * index 0 is the zero element and index k (1 <= k <= q^2-1) is g^(k-1)
 * for the chosen primitive element g. All modules of the library share
 * this enumeration.
 */
#ifndef HERMDEC_FIELD_HPP
#define HERMDEC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hermdec {

/// Raw field element: an index into the field enumeration.
using fe = std::uint16_t;

class field_error : public std::runtime_error {
public:
    explicit field_error(const std::string& what) : std::runtime_error(what) {}
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(q^2) with q = p^e. Immutable after construction; safe to share
/// between threads.
class Field {
public:
    /// Built-in field for q in {2, 3, 4}:
    ///   q=2: GF(4)  = GF(2)[t]/(t^2+t+1),    g = t
    ///   q=3: GF(9)  = GF(3)[t]/(t^2+2t+2),   g = t
    ///   q=4: GF(16) = GF(2)[t]/(t^4+t+1),    g = t
    static FieldPtr make(int q);

    /// General constructor. modulus has degree 2e over GF(p), coefficients
    /// listed ascending and reduced mod p; primitive is the polynomial
    /// representation of a generator of the multiplicative group.
    Field(int p, int e, std::vector<int> modulus, std::vector<int> primitive);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    /// Field size q^2.
    int size() const { return q2_; }

    fe add(fe a, fe b) const { return add_[a * q2_ + b]; }
    fe sub(fe a, fe b) const { return add(a, neg(b)); }
    fe neg(fe a) const { return neg_[a]; }
    fe mul(fe a, fe b) const {
        if (a == 0 || b == 0) return 0;
        return static_cast<fe>(1 + (a - 1 + b - 1) % (q2_ - 1));
    }
    fe inv(fe a) const {
        if (a == 0) throw field_error("inversion of zero");
        return static_cast<fe>(1 + (q2_ - 1 - (a - 1)) % (q2_ - 1));
    }
    fe pow(fe a, long long n) const;
    fe div(fe a, fe b) const { return mul(a, inv(b)); }

    /// Embedding of the prime subfield: m * 1.
    fe from_int(long long m) const;
    /// Tr(b) = b^q + b, an element of the subfield GF(q).
    fe trace_to_subfield(fe b) const { return add(pow(b, q_), b); }
    /// b^q (the conjugation over GF(q)).
    fe conj(fe b) const { return pow(b, q_); }

    /// Log-form text: "0", "1", "a", "a^2", ...
    std::string to_string(fe a) const;
    fe parse(std::string_view s) const;

    bool compatible(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_ &&
               primitive_ == o.primitive_;
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    int p_, e_, q_, q2_;
    std::vector<int> modulus_;
    std::vector<int> primitive_;
    std::vector<fe> add_;
    std::vector<fe> neg_;
};

/// Checked value wrapper around a raw element index.
class FieldElement {
public:
    FieldElement() : f_(nullptr), v_(0) {}
    FieldElement(const Field& f, fe v) : f_(&f), v_(v) {}

    fe value() const { return v_; }
    const Field& field() const {
        if (!f_) throw field_error("element has no field");
        return *f_;
    }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.check(b);
        return {*a.f_, a.f_->div(a.v_, b.v_)};
    }
    FieldElement inverse() const { return {field(), f_->inv(v_)}; }
    FieldElement pow(long long n) const { return {field(), f_->pow(v_, n)}; }
    bool operator==(const FieldElement& o) const {
        return v_ == o.v_ && (f_ == o.f_ || (f_ && o.f_ && f_->compatible(*o.f_)));
    }
    std::string str() const { return field().to_string(v_); }

private:
    void check(const FieldElement& o) const {
        if (!f_ || !o.f_) throw field_error("element has no field");
        if (f_ != o.f_ && !f_->compatible(*o.f_))
            throw field_error("mismatched fields");
    }
    const Field* f_;
    fe v_;
};

}  // namespace hermdec

#endif
