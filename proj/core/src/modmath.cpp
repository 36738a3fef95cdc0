#include "mecsbox/modmath.hpp"

#include <string>

#include "mecsbox/error.hpp"

namespace mecsbox {

namespace {
constexpr std::int64_t kMaxPrime = 0xFFFFFFFFLL;
}

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

FieldPrime FieldPrime::validate(std::int64_t p) {
    if (p > kMaxPrime) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " exceeds the supported 32-bit range");
    }
    if (!is_prime(p)) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    if (p % 3 != 2) {
        throw Error(ErrorCode::WrongResidueClass,
                    std::to_string(p) + " mod 3 = " + std::to_string(p % 3) + ", need 2");
    }
    if (p < 5) {
        throw Error(ErrorCode::TooSmall, std::to_string(p) + " is below the minimum prime 5");
    }
    return FieldPrime(static_cast<std::uint64_t>(p));
}

FieldElement FieldPrime::element(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return FieldElement(*this, static_cast<std::uint64_t>(r));
}

FieldElement FieldElement::operator+(FieldElement rhs) const noexcept {
    std::uint64_t s = v_ + rhs.v_;
    if (s >= p_) s -= p_;
    return FieldElement(p_, s, 0);
}

FieldElement FieldElement::operator-(FieldElement rhs) const noexcept {
    return FieldElement(p_, v_ >= rhs.v_ ? v_ - rhs.v_ : v_ + p_ - rhs.v_, 0);
}

FieldElement FieldElement::operator*(FieldElement rhs) const noexcept {
    return FieldElement(p_, (v_ * rhs.v_) % p_, 0);
}

FieldElement mod_pow(FieldElement base, std::uint64_t exp) noexcept {
    FieldElement result = base.unit();
    while (exp != 0) {
        if (exp & 1) result = result * base;
        base = base * base;
        exp >>= 1;
    }
    return result;
}

FieldElement cube_root(FieldElement a) noexcept {
    return mod_pow(a, (2 * a.modulus() - 1) / 3);
}

}  // namespace mecsbox
