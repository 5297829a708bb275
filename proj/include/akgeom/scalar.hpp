#pragma once

// Scalar: exact rational or tolerance-tagged floating value.
//
// Every tensor in the library is built over Scalar. The mode is a runtime
// tag; mixing exact and float operands in one operation throws ModeMismatch
// rather than silently coercing. Exact mode is the default everywhere.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace akgeom {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class Mode { Exact, Float };

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ModeMismatch : Error {
    ModeMismatch() : Error("mixed exact/float scalar modes in one computation") {}
};

struct NotPerfectSquare : Error {
    explicit NotPerfectSquare(const std::string& v)
        : Error("exact sqrt requires a perfect square, got " + v) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension error: " + msg) {}
};

struct BadInput : Error {
    explicit BadInput(const std::string& msg) : Error("bad input: " + msg) {}
};

class Scalar {
public:
    Scalar() : mode_(Mode::Exact), q_(0), d_(0.0), tol_(0.0) {}

    static Scalar exact(const Rational& q) {
        Scalar s;
        s.q_ = q;
        return s;
    }
    static Scalar exact(long num, long den = 1) {
        if (den == 0) throw BadInput("zero denominator");
        return exact(Rational(num, den));
    }
    static Scalar flt(double v, double tol) {
        if (tol < 0.0) throw BadInput("negative tolerance");
        Scalar s;
        s.mode_ = Mode::Float;
        s.d_ = v;
        s.tol_ = tol;
        return s;
    }

    // Accepts "p/q", "p", or (float mode only) a decimal literal.
    static Scalar parse(const std::string& text, Mode mode, double tol = 0.0) {
        auto slash = text.find('/');
        if (mode == Mode::Exact) {
            try {
                if (slash == std::string::npos) return exact(Rational(BigInt(text)));
                BigInt num(text.substr(0, slash));
                BigInt den(text.substr(slash + 1));
                if (den == 0) throw BadInput("zero denominator in \"" + text + "\"");
                return exact(Rational(num, den));
            } catch (const std::exception&) {
                throw BadInput("cannot parse exact rational \"" + text + "\"");
            }
        }
        try {
            if (slash != std::string::npos) {
                double num = std::stod(text.substr(0, slash));
                double den = std::stod(text.substr(slash + 1));
                if (den == 0.0) throw BadInput("zero denominator in \"" + text + "\"");
                return flt(num / den, tol);
            }
            return flt(std::stod(text), tol);
        } catch (const BadInput&) {
            throw;
        } catch (const std::exception&) {
            throw BadInput("cannot parse float \"" + text + "\"");
        }
    }

    Mode mode() const { return mode_; }
    double tolerance() const { return tol_; }
    const Rational& rational() const {
        if (mode_ != Mode::Exact) throw Error("rational() on a float-mode scalar");
        return q_;
    }
    double to_double() const {
        return mode_ == Mode::Exact ? q_.convert_to<double>() : d_;
    }

    bool is_zero() const {
        if (mode_ == Mode::Exact) return q_ == 0;
        return std::abs(d_) <= tol_;
    }
    // -1, 0, +1 with the zero band given by the tolerance in float mode.
    int sign() const {
        if (mode_ == Mode::Exact) return q_ == 0 ? 0 : (q_ > 0 ? 1 : -1);
        if (std::abs(d_) <= tol_) return 0;
        return d_ > 0 ? 1 : -1;
    }

    Scalar operator-() const {
        Scalar r = *this;
        if (mode_ == Mode::Exact) r.q_ = -q_; else r.d_ = -d_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = combined(a, b);
        if (r.mode_ == Mode::Exact) r.q_ = a.q_ + b.q_; else r.d_ = a.d_ + b.d_;
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r = combined(a, b);
        if (r.mode_ == Mode::Exact) r.q_ = a.q_ - b.q_; else r.d_ = a.d_ - b.d_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r = combined(a, b);
        if (r.mode_ == Mode::Exact) r.q_ = a.q_ * b.q_; else r.d_ = a.d_ * b.d_;
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Scalar r = combined(a, b);
        if (b.is_zero()) throw Error("division by zero");
        if (r.mode_ == Mode::Exact) r.q_ = a.q_ / b.q_; else r.d_ = a.d_ / b.d_;
        return r;
    }
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

    // Exact mode: defined only for perfect squares (numerator and denominator
    // both square); anything else throws. Float mode: ordinary sqrt.
    Scalar sqrt() const {
        if (mode_ == Mode::Float) {
            if (d_ < -tol_) throw Error("sqrt of negative value");
            return flt(std::sqrt(std::max(d_, 0.0)), tol_);
        }
        if (q_ < 0) throw Error("sqrt of negative value");
        BigInt num = boost::multiprecision::numerator(q_);
        BigInt den = boost::multiprecision::denominator(q_);
        BigInt rn = boost::multiprecision::sqrt(num);
        BigInt rd = boost::multiprecision::sqrt(den);
        if (rn * rn != num || rd * rd != den) throw NotPerfectSquare(str());
        return exact(Rational(rn, rd));
    }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        if (mode_ == Mode::Exact) {
            BigInt den = boost::multiprecision::denominator(q_);
            BigInt num = boost::multiprecision::numerator(q_);
            if (den == 1) return num.str();
            return num.str() + "/" + den.str();
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", d_);
        return buf;
    }

private:
    static Scalar combined(const Scalar& a, const Scalar& b) {
        if (a.mode_ != b.mode_) throw ModeMismatch();
        Scalar r;
        r.mode_ = a.mode_;
        if (r.mode_ == Mode::Float) r.tol_ = std::max(a.tol_, b.tol_);
        return r;
    }

    Mode mode_;
    Rational q_;
    double d_;
    double tol_;
};

// Context describing how literals should be materialized; threaded through
// code that has to build constants in either mode.
struct ScalarCtx {
    Mode mode = Mode::Exact;
    double tol = 0.0;

    Scalar num(long n, long d = 1) const {
        if (mode == Mode::Exact) return Scalar::exact(n, d);
        return Scalar::flt(static_cast<double>(n) / static_cast<double>(d), tol);
    }
    Scalar zero() const { return num(0); }
    Scalar one() const { return num(1); }
};

}  // namespace akgeom
