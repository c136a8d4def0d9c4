use serde::{Serialize, Serializer};

use super::{dupl, homothety_exponent, homothety_exponent_of, in_t, tol, tol_from_factorization};
use super::{gdisc, tol_irreducible, FormulaMode};
use crate::error::Error;
use crate::factor::{separable_decomposition, Factorization};
use crate::field::{Field, FieldDescriptor};
use crate::poly::Poly;
use crate::resultant::discriminant;

/// What the caller knows about the input beyond its coefficients.
#[derive(Debug, Clone)]
pub struct ReportOptions<F: Field> {
    pub factorization: Option<Factorization<F>>,
    pub assert_irreducible: bool,
    pub mode: FormulaMode,
}

impl<F: Field> Default for ReportOptions<F> {
    fn default() -> Self {
        ReportOptions {
            factorization: None,
            assert_irreducible: false,
            mode: FormulaMode::Corrected,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub kind: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

impl From<&Error> for ErrorRecord {
    fn from(e: &Error) -> Self {
        ErrorRecord {
            kind: e.kind(),
            message: e.to_string(),
            offset: e.offset(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscEntry {
    Value(String),
    RepeatedRoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InTEntry {
    Known(bool),
    Undefined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentEntry {
    Known(u64),
    Unavailable,
}

impl Serialize for DiscEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DiscEntry::Value(v) => s.serialize_str(v),
            DiscEntry::RepeatedRoot => s.serialize_str("REPEATED_ROOT"),
        }
    }
}

impl Serialize for InTEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            InTEntry::Known(b) => s.serialize_bool(*b),
            InTEntry::Undefined => s.serialize_str("UNDEFINED"),
        }
    }
}

impl Serialize for ExponentEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExponentEntry::Known(k) => s.serialize_u64(*k),
            ExponentEntry::Unavailable => s.serialize_str("UNAVAILABLE"),
        }
    }
}

/// Every invariant of one input, as canonical strings. Entries whose
/// preconditions fail are `null` or a marker, with the reason in `errors`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub field: FieldDescriptor,
    pub input: String,
    pub degree: Option<usize>,
    pub tol: Option<String>,
    pub dupl: Option<String>,
    pub gdisc: Option<String>,
    pub disc: Option<DiscEntry>,
    pub separable: Option<bool>,
    #[serde(rename = "in_T")]
    pub in_t: Option<InTEntry>,
    pub homothety_exponent: ExponentEntry,
    pub paths_agree: bool,
    pub trusted_input: bool,
    pub errors: Vec<ErrorRecord>,
}

impl InvariantReport {
    /// A report for input that never became a polynomial.
    pub fn failed(field: FieldDescriptor, input: &str, err: &Error) -> Self {
        InvariantReport {
            field,
            input: input.to_string(),
            degree: None,
            tol: None,
            dupl: None,
            gdisc: None,
            disc: None,
            separable: None,
            in_t: None,
            homothety_exponent: ExponentEntry::Unavailable,
            paths_agree: false,
            trusted_input: false,
            errors: vec![err.into()],
        }
    }
}

/// Computes every invariant of `f`. Never panics on bad input: failures
/// become [`ErrorRecord`]s.
///
/// `tol` comes from the generalized discriminant. `paths_agree` holds when
/// every independent path that applies reproduces it: the separable
/// decomposition under the corrected formula, the discriminant for separable
/// input, a full factorization where one is computable, the supplied
/// factorization under the requested mode, and the irreducible formula when
/// irreducibility is asserted.
pub fn report<F: Field>(input: &str, f: &Poly<F>, opts: &ReportOptions<F>) -> InvariantReport {
    fn note(e: &Error, errors: &mut Vec<ErrorRecord>) {
        let rec = ErrorRecord::from(e);
        if !errors.contains(&rec) {
            errors.push(rec);
        }
    }
    let mut errors: Vec<ErrorRecord> = Vec::new();
    let field = f.descriptor();
    let ctx = f.ctx();
    let Some(n) = f.degree() else {
        return InvariantReport::failed(field, input, &Error::ZeroPolynomial);
    };

    let reference = match tol(f) {
        Ok(t) => Some(t),
        Err(e) => {
            note(&e, &mut errors);
            None
        }
    };
    let dupl_value = dupl(f).ok();
    let gdisc_value = if n >= 2 {
        gdisc(f).map_err(|e| note(&e, &mut errors)).ok()
    } else {
        // the defining resultant degenerates to lc / lc
        Some(F::one(ctx))
    };

    let (disc, separable, disc_value) = if n == 0 {
        note(&Error::ConstantInput, &mut errors);
        (None, None, None)
    } else {
        let separable = f.is_separable().ok();
        match discriminant(f) {
            Ok(d) if d.is_zero() => (Some(DiscEntry::RepeatedRoot), separable, None),
            Ok(d) => (Some(DiscEntry::Value(d.to_string())), separable, Some(d)),
            Err(e) => {
                note(&e, &mut errors);
                (None, separable, None)
            }
        }
    };

    let in_t_entry = if f.constant_term().is_zero() {
        Some(InTEntry::Undefined)
    } else {
        match in_t(f) {
            Ok(b) => Some(InTEntry::Known(b)),
            Err(e) => {
                note(&e, &mut errors);
                None
            }
        }
    };

    let exponent = match &opts.factorization {
        Some(fac) => homothety_exponent_of(fac).or_else(|_| homothety_exponent(f)),
        None => homothety_exponent(f),
    };
    let homothety = match exponent {
        Ok(k) => ExponentEntry::Known(k),
        Err(e) => {
            note(&e, &mut errors);
            ExponentEntry::Unavailable
        }
    };

    let mut trusted_input = false;
    let mut others: Vec<F> = Vec::new();
    if let Some(d) = &disc_value {
        others.push(d.clone());
    }
    if n >= 1 {
        match separable_decomposition(f)
            .and_then(|fac| tol_from_factorization(&fac, FormulaMode::Corrected))
        {
            Ok(v) => others.push(v),
            Err(e) => note(&e, &mut errors),
        }
        if let Some(full) = F::factorize(f) {
            match full.and_then(|fac| tol_from_factorization(&fac, FormulaMode::Corrected)) {
                Ok(v) => others.push(v),
                Err(e) => note(&e, &mut errors),
            }
        }
    }
    let mut supplied_ok = true;
    if let Some(fac) = &opts.factorization {
        let value = fac
            .validate_against(f)
            .and_then(|()| tol_from_factorization(fac, opts.mode));
        match value {
            Ok(v) => others.push(v),
            Err(e) => {
                supplied_ok = false;
                note(&e, &mut errors);
            }
        }
        for (g, _) in &fac.factors {
            match F::irreducibility_known(g) {
                Some(true) => {}
                Some(false) => note(
                    &Error::InvalidFactorization(format!("factor {g} is reducible")),
                    &mut errors,
                ),
                None => trusted_input = true,
            }
        }
    }
    if opts.assert_irreducible {
        match tol_irreducible(f) {
            Ok(a) => {
                trusted_input |= a.trusted;
                others.push(a.value);
            }
            Err(e) => {
                supplied_ok = false;
                note(&e, &mut errors);
            }
        }
    }
    let paths_agree = match &reference {
        Some(t) => !t.is_zero() && supplied_ok && others.iter().all(|v| v == t),
        None => false,
    };

    InvariantReport {
        field,
        input: input.to_string(),
        degree: Some(n),
        tol: reference.map(|t| t.to_string()),
        dupl: dupl_value.map(|d| d.to_string()),
        gdisc: gdisc_value.map(|g| g.to_string()),
        disc,
        separable,
        in_t: in_t_entry,
        homothety_exponent: homothety,
        paths_agree,
        trusted_input,
        errors,
    }
}
