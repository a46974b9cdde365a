#ifndef SQUEEZE_FIELD_HPP
#define SQUEEZE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace squeeze {

// Scalar field selector for the generic-initial-ideal engine.  Rationals are
// the default (exact, characteristic 0); the prime field is a fast mode and
// is flagged as heuristic for characteristic 0 in reports.
enum class Field { rationals, prime };

inline std::string field_name(Field f) { return f == Field::rationals ? "q" : "p"; }

inline Field parse_field(const std::string& s) {
    if (s == "q" || s == "rationals") return Field::rationals;
    if (s == "p" || s == "prime") return Field::prime;
    throw std::invalid_argument("field must be 'q' or 'p'");
}

// Z / (2^31 - 1).
class Fp {
public:
    static constexpr std::uint64_t P = 2147483647ULL;

    Fp() : v_(0) {}
    Fp(long x) {  // NOLINT: implicit by design, mirrors mpq_class
        long r = x % static_cast<long>(P);
        if (r < 0) r += static_cast<long>(P);
        v_ = static_cast<std::uint64_t>(r);
    }
    Fp(int x) : Fp(static_cast<long>(x)) {}

    std::uint64_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % P); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + P - b.v_) % P); }
    friend Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % P); }
    friend Fp operator/(Fp a, Fp b) {
        if (b.v_ == 0) throw std::domain_error("division by zero in F_p");
        return a * b.inverse();
    }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    Fp& operator/=(Fp b) { return *this = *this / b; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {  // Fermat: v^(P-2)
        if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
        std::uint64_t base = v_, result = 1, e = P - 2;
        while (e) {
            if (e & 1) result = result * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return from_raw(result);
    }

private:
    static Fp from_raw(std::uint64_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
    std::uint64_t v_;
};

template <class F>
inline bool is_zero(const F& x) {
    return x == F(0);
}
template <>
inline bool is_zero<mpq_class>(const mpq_class& x) {
    return sgn(x) == 0;
}

}  // namespace squeeze

#endif
