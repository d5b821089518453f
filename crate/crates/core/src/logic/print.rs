use core::fmt;

use super::{Formula, Term};

// Binding strength; higher binds tighter.
const IMPLIES: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const NOT: u8 = 4;
const ATOM: u8 = 5;

const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const NEG: u8 = 3;

fn term_level(t: &Term) -> u8 {
    match t {
        Term::Add(..) => SUM,
        Term::Mul(..) => PRODUCT,
        Term::Neg(_) => NEG,
        _ => NEG + 1,
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, min: u8) -> fmt::Result {
    if term_level(t) < min {
        f.write_str("(")?;
        write_term(f, t, 0)?;
        return f.write_str(")");
    }
    match t {
        Term::Var(v) => f.write_str(v),
        Term::Zero => f.write_str("0"),
        Term::One => f.write_str("1"),
        Term::Neg(inner) => {
            f.write_str("-")?;
            write_term(f, inner, NEG)
        }
        Term::Mul(a, b) => {
            write_term(f, a, PRODUCT)?;
            f.write_str(" * ")?;
            write_term(f, b, PRODUCT + 1)
        }
        Term::Add(a, b) => {
            write_term(f, a, SUM)?;
            f.write_str(" + ")?;
            write_term(f, b, SUM + 1)
        }
    }
}

fn formula_level(g: &Formula) -> u8 {
    match g {
        Formula::Implies(..) => IMPLIES,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        Formula::Not(inner) if !matches!(inner.as_ref(), Formula::Eq(..)) => NOT,
        // Quantifiers never appear bare as operands.
        Formula::Exists(..) | Formula::Forall(..) => 0,
        _ => ATOM,
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, g: &Formula, min: u8) -> fmt::Result {
    if formula_level(g) < min {
        f.write_str("(")?;
        write_formula(f, g, 0)?;
        return f.write_str(")");
    }
    match g {
        Formula::Leq(a, b) => {
            write_term(f, a, 0)?;
            f.write_str(" <= ")?;
            write_term(f, b, 0)
        }
        Formula::Eq(a, b) => {
            write_term(f, a, 0)?;
            f.write_str(" = ")?;
            write_term(f, b, 0)
        }
        Formula::Conv(t) => {
            f.write_str("conv(")?;
            write_term(f, t, 0)?;
            f.write_str(")")
        }
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Eq(a, b) => {
                write_term(f, a, 0)?;
                f.write_str(" != ")?;
                write_term(f, b, 0)
            }
            other => {
                f.write_str("!")?;
                write_formula(f, other, NOT)
            }
        },
        Formula::And(a, b) => {
            write_formula(f, a, AND)?;
            f.write_str(" & ")?;
            write_formula(f, b, AND + 1)
        }
        Formula::Or(a, b) => {
            write_formula(f, a, OR)?;
            f.write_str(" | ")?;
            write_formula(f, b, OR + 1)
        }
        Formula::Implies(a, b) => {
            write_formula(f, a, IMPLIES + 1)?;
            f.write_str(" -> ")?;
            write_formula(f, b, IMPLIES)
        }
        Formula::Exists(v, body) => {
            write!(f, "E {v}. ")?;
            write_formula(f, body, 0)
        }
        Formula::Forall(v, body) => {
            write!(f, "A {v}. ")?;
            write_formula(f, body, 0)
        }
        Formula::Macro(m, args) => {
            write!(f, "{}(", m.name())?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write_term(f, a, 0)?;
            }
            f.write_str(")")
        }
        Formula::Helly { dim, count } => write!(f, "helly({dim},{count})"),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, 0)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, 0)
    }
}
