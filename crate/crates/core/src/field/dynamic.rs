use std::fmt;

use super::{Field, FieldDescriptor, Fp, RatFunc, Rational, Rationals};
use crate::error::{Error, Result};

/// A scalar from any of the supported fields, tagged at runtime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(Rational),
    Prime(Fp),
    RationalFunction(RatFunc),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldElement::Rational(_) => Rational::describe(&Rationals),
            FieldElement::Prime(a) => Fp::describe(&a.ctx()),
            FieldElement::RationalFunction(a) => RatFunc::describe(&a.ctx()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(a) => a.is_zero(),
            FieldElement::Prime(a) => a.is_zero(),
            FieldElement::RationalFunction(a) => a.is_zero(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(a) => a.fmt(f),
            FieldElement::Prime(a) => a.fmt(f),
            FieldElement::RationalFunction(a) => a.fmt(f),
        }
    }
}

impl From<Rational> for FieldElement {
    fn from(a: Rational) -> Self {
        FieldElement::Rational(a)
    }
}

impl From<Fp> for FieldElement {
    fn from(a: Fp) -> Self {
        FieldElement::Prime(a)
    }
}

impl From<RatFunc> for FieldElement {
    fn from(a: RatFunc) -> Self {
        FieldElement::RationalFunction(a)
    }
}

fn apply<F: Field>(a: &F, b: &F, op: ArithOp) -> Result<F> {
    if a.ctx() != b.ctx() {
        return Err(Error::FieldMismatch(
            F::describe(&a.ctx()).to_string(),
            F::describe(&b.ctx()).to_string(),
        ));
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b)?,
    })
}

/// Checked arithmetic on runtime-tagged scalars.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    use FieldElement::*;
    match (a, b) {
        (Rational(x), Rational(y)) => apply(x, y, op).map(Rational),
        (Prime(x), Prime(y)) => apply(x, y, op).map(Prime),
        (RationalFunction(x), RationalFunction(y)) => apply(x, y, op).map(RationalFunction),
        _ => Err(Error::FieldMismatch(
            a.descriptor().to_string(),
            b.descriptor().to_string(),
        )),
    }
}
