#pragma once

#include "translab/ball.hpp"
#include "translab/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace translab {

// Immutable expression tree. Printing follows the canonical grammar:
//   integers, "p/q", "pi", "i", "sqrt(k)", "exp(.)", "log(.)", "cot(pi*.)",
//   "coth(pi*.)", binary "*" and "/", n-ary sums joined by "+"/"-", "^int".
// Non-atomic operands are parenthesized.
class ClosedForm {
public:
    enum class Kind { Const, Pi, EulerGamma, Sqrt, Exp, Log, Cot, Coth, Sum, Neg, Product, Quotient, Power };

    ClosedForm() : ClosedForm(ExactScalar(0)) {}
    ClosedForm(const ExactScalar& c);
    ClosedForm(long c) : ClosedForm(ExactScalar(c)) {}

    static ClosedForm pi();
    static ClosedForm euler_gamma();
    static ClosedForm sqrt(const Int& k);
    static ClosedForm exp(const ClosedForm& arg);
    static ClosedForm log(const ClosedForm& arg);
    static ClosedForm cot_pi(const ExactScalar& arg);   // cot(pi*arg)
    static ClosedForm coth_pi(const ExactScalar& arg);  // coth(pi*arg)
    static ClosedForm sum(std::vector<ClosedForm> terms);  // terms may be Neg(...)
    static ClosedForm neg(const ClosedForm& x);
    static ClosedForm product(const ClosedForm& a, const ClosedForm& b);
    static ClosedForm quotient(const ClosedForm& a, const ClosedForm& b);
    static ClosedForm power(const ClosedForm& base, long e);

    static ClosedForm parse(const std::string& s);

    Kind kind() const { return node_->kind; }
    const ExactScalar& value() const { return node_->value; }
    long exponent() const { return node_->exponent; }
    const std::vector<ClosedForm>& kids() const { return node_->kids; }

    bool is_const() const { return kind() == Kind::Const; }
    bool is_zero() const { return is_const() && value().is_zero(); }
    bool is_atom() const;

    std::string str() const;
    friend bool operator==(const ClosedForm& a, const ClosedForm& b);
    friend bool operator!=(const ClosedForm& a, const ClosedForm& b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        ExactScalar value;  // Const value, Sqrt radicand, Cot/Coth argument
        long exponent = 0;
        std::vector<ClosedForm> kids;
    };
    explicit ClosedForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static ClosedForm make(Kind k, ExactScalar v, long e, std::vector<ClosedForm> kids);

    std::string operand_str() const;

    std::shared_ptr<const Node> node_;
};

// Enclosures of the exact value. Singular cot/coth/log arguments raise
// ErrorKind::SingularArgument.
CBall enclose_complex(const ClosedForm& expr, long prec);
Ball enclose(const ClosedForm& expr, long prec);  // requires a real value

// Atom of a symbolic monomial. The ordering Log < Sqrt < Pi < EulerGamma <
// Cot < Coth fixes the canonical term order.
struct SymAtom {
    enum class Kind { Log = 0, Sqrt = 1, Pi = 2, EulerGamma = 3, Cot = 4, Coth = 5 };
    Kind kind;
    ExactScalar arg;  // Log: positive rational; Sqrt: squarefree integer; Cot/Coth: argument
    friend bool operator<(const SymAtom& a, const SymAtom& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.arg < b.arg;
    }
    friend bool operator==(const SymAtom& a, const SymAtom& b) { return a.kind == b.kind && a.arg == b.arg; }
};

using Monomial = std::map<SymAtom, long>;  // atom -> nonzero power

// Exact linear combination of monomials with Gaussian-rational coefficients;
// the normal form behind every closed form the library emits.
class SymbolicSum {
public:
    SymbolicSum() = default;
    SymbolicSum(const ExactScalar& c);

    static SymbolicSum atom(SymAtom a, long power = 1);
    static SymbolicSum pi(long power = 1) { return atom({SymAtom::Kind::Pi, ExactScalar(0)}, power); }
    static SymbolicSum log(const Rat& q);  // splits into logs of primes
    static SymbolicSum sqrt(const Int& k);
    // cot(pi*arg) with exact special values for denominators dividing 12 and
    // the imaginary-argument rewrite cot(pi*i*C) = -i*coth(pi*C)
    static SymbolicSum cot_pi(const ExactScalar& arg);

    SymbolicSum& operator+=(const SymbolicSum& o);
    SymbolicSum& operator-=(const SymbolicSum& o);
    SymbolicSum& operator*=(const SymbolicSum& o);
    friend SymbolicSum operator+(SymbolicSum a, const SymbolicSum& b) { return a += b; }
    friend SymbolicSum operator-(SymbolicSum a, const SymbolicSum& b) { return a -= b; }
    friend SymbolicSum operator*(SymbolicSum a, const SymbolicSum& b) { return a *= b; }
    SymbolicSum scaled(const ExactScalar& c) const;
    SymbolicSum pow(unsigned long e) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;  // only a constant term, real
    ExactScalar constant() const;
    const std::map<Monomial, ExactScalar>& terms() const { return terms_; }
    friend bool operator==(const SymbolicSum& a, const SymbolicSum& b) { return a.terms_ == b.terms_; }

    ClosedForm to_closed_form() const;
    std::string str() const { return to_closed_form().str(); }

private:
    void add_term(Monomial m, const ExactScalar& c);
    std::map<Monomial, ExactScalar> terms_;
};

}  // namespace translab
