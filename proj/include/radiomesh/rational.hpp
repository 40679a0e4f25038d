#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace radiomesh {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    constexpr Rational(std::int64_t num = 0) : num_(num), den_(1) {} // NOLINT: implicit from integers
    constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const auto g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool integral() const noexcept { return den_ == 1; }

    /// Numerator when integral; throws std::domain_error otherwise.
    [[nodiscard]] std::int64_t as_integer() const {
        if (!integral()) throw std::domain_error(to_string() + " is not an integer");
        return num_;
    }

    [[nodiscard]] std::string to_string() const {
        return integral() ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator-(Rational a, Rational b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend constexpr Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
    friend constexpr Rational operator/(Rational a, Rational b) { return {a.num_ * b.den_, a.den_ * b.num_}; }
    friend constexpr Rational operator-(Rational a) { return {-a.num_, a.den_}; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace radiomesh
