//! Homogeneous symmetric functions with exact rational coefficients.
//!
//! A [`SymFunc`] is a sparse expansion in one of four bases: power sums (`p`),
//! monomials (`m`), elementary (`e`) or Schur (`s`). The monomial basis is the
//! conversion hub. Going into `m` sums stored rows of the transition matrix;
//! going out of `m` is a triangular back-substitution ordered by the fixed
//! partition enumeration order:
//!
//! * `e_λ` has leading monomial `m_{λᵗ}` (coefficient 1) and only dominated
//!   terms below it, so `e` is solved scanning partitions from the top.
//! * `s_λ` has leading monomial `m_λ` (coefficient 1), again solved from the top.
//! * `p_λ` only involves monomials `m_μ` with `μ` dominating `λ`, with diagonal
//!   entry `∏ mᵢ!`; it is solved scanning from the bottom.

mod jacobi_trudi;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use jacobi_trudi::jacobi_trudi_s_in_e;
pub use tables::{kostka_table, tables, DegreeTables, KostkaTable};

pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P,
    M,
    E,
    S,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::M => "m",
            Basis::E => "e",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "s" => Ok(Basis::S),
            other => Err(Error::Parse(format!("unknown basis `{other}` (expected p, m, e or s)"))),
        }
    }
}

/// A homogeneous symmetric function of a fixed degree in a fixed basis.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, coeffs: BTreeMap::new() }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.weight();
        let mut f = SymFunc::zero(basis, degree);
        f.coeffs.insert(lambda, Rational::one());
        f
    }

    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFunc::zero(basis, degree);
        for (p, c) in terms {
            f.add_term(p, c)?;
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `b_λ` (zero if absent).
    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in enumeration (reverse-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter().rev()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::WeightMismatch { expected: self.degree, found: lambda.weight() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
        Ok(())
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!("{} vs {}", self.basis, other.basis)));
        }
        if self.degree != other.degree {
            return Err(Error::WeightMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis, self.degree);
        }
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Product in a multiplicative basis (`p` or `e`), where `b_λ b_μ = b_{λ∪μ}`.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis || !matches!(self.basis, Basis::P | Basis::E) {
            return Err(Error::BasisMismatch(format!(
                "products are only taken in the p or e basis (got {} and {})",
                self.basis, other.basis
            )));
        }
        let mut out = SymFunc::zero(self.basis, self.degree + other.degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a.union(b), x * y)?;
            }
        }
        Ok(out)
    }

    /// The first negative coefficient in enumeration order, if any.
    pub fn negative_witness(&self) -> Option<(&Partition, &Rational)> {
        self.terms().find(|(_, c)| c.is_negative())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.negative_witness().is_none()
    }

    /// Re-expresses `self` in `target`.
    pub fn to_basis(&self, target: Basis) -> Result<SymFunc> {
        if self.basis == target {
            return Ok(self.clone());
        }
        if (self.basis, target) == (Basis::P, Basis::E) {
            return power_sums_to_elementary(self);
        }
        let t = tables(self.degree);
        let dense = self.monomial_dense(&t);
        solve_from_monomial(&t, dense, target)
    }

    fn monomial_dense(&self, t: &DegreeTables) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); t.partitions().len()];
        let rows = match self.basis {
            Basis::M => {
                for (p, c) in &self.coeffs {
                    v[t.index_of(p)] += c;
                }
                return v;
            }
            Basis::E => t.e_rows(),
            Basis::P => t.p_rows(),
            Basis::S => t.s_rows(),
        };
        for (p, c) in &self.coeffs {
            for (j, x) in &rows[t.index_of(p)] {
                v[*j] += c * Rational::from_integer(x.clone());
            }
        }
        v
    }

    /// JSON object `{ "basis": "e", "degree": n, "coeffs": { "3,2,2": "-3", ... } }`
    /// with coefficients as `p/q` strings (integers without a denominator).
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (p, c) in self.terms() {
            coeffs.insert(p.to_plain_string(), Value::String(c.to_string()));
        }
        let mut obj = Map::new();
        obj.insert("basis".into(), Value::String(self.basis.symbol().into()));
        obj.insert("degree".into(), Value::from(self.degree));
        obj.insert("coeffs".into(), Value::Object(coeffs));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<SymFunc> {
        let bad = |m: &str| Error::Parse(format!("symmetric function JSON: {m}"));
        let basis: Basis = v.get("basis").and_then(Value::as_str).ok_or_else(|| bad("missing basis"))?.parse()?;
        let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("missing degree"))? as usize;
        let coeffs = v.get("coeffs").and_then(Value::as_object).ok_or_else(|| bad("missing coeffs"))?;
        let mut f = SymFunc::zero(basis, degree);
        for (k, c) in coeffs {
            let p: Partition = k.parse()?;
            let c = c.as_str().ok_or_else(|| bad("coefficient is not a string"))?;
            let c: Rational = c.parse().map_err(|_| bad(&format!("bad rational `{c}`")))?;
            f.add_term(p, c)?;
        }
        Ok(f)
    }

    /// One `b_{(3,2^2)}: -3` line per term, enumeration order.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (p, c) in self.terms() {
            s.push_str(&format!("{}_{{{}}}: {}\n", self.basis.symbol(), p, c));
        }
        s
    }
}

/// Inline rendering, e.g. `7e_{(7)} + 11e_{(6,1)} - 3e_{(3,2^2)}`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{}_{{{}}}", self.basis.symbol(), p)?;
        }
        Ok(())
    }
}

fn solve_from_monomial(t: &DegreeTables, mut v: Vec<Rational>, target: Basis) -> Result<SymFunc> {
    let parts = t.partitions();
    let mut out = SymFunc::zero(target, t.degree());
    if target == Basis::M {
        for (p, c) in parts.iter().zip(v) {
            out.add_term(p.clone(), c)?;
        }
        return Ok(out);
    }
    let (rows, order): (&[tables::Row], Box<dyn Iterator<Item = usize>>) = match target {
        Basis::E => (t.e_rows(), Box::new(0..parts.len())),
        Basis::S => (t.s_rows(), Box::new(0..parts.len())),
        Basis::P => (t.p_rows(), Box::new((0..parts.len()).rev())),
        Basis::M => unreachable!(),
    };
    for idx in order {
        if v[idx].is_zero() {
            continue;
        }
        let lead = match target {
            Basis::E => t.index_of(&parts[idx].transpose()),
            _ => idx,
        };
        let row = &rows[lead];
        let diag = row
            .iter()
            .find(|(j, _)| *j == idx)
            .map(|(_, x)| x.clone())
            .unwrap_or_else(BigInt::zero);
        if diag.is_zero() {
            return Err(Error::SingularSystem(format!("{}_{}", target, parts[lead])));
        }
        let a = &v[idx] / Rational::from_integer(diag);
        for (j, x) in row {
            v[*j] -= &a * Rational::from_integer(x.clone());
        }
        out.add_term(parts[lead].clone(), a)?;
    }
    if let Some(i) = v.iter().position(|x| !x.is_zero()) {
        return Err(Error::SingularSystem(format!("residual at m_{}", parts[i])));
    }
    Ok(out)
}

/// `p → e` without monomial tables: `p_k` has a closed elementary expansion
/// and `e` is multiplicative, so terms are grouped by leading part and
/// evaluated Horner style, `Σ_k p_k · (Σ c_λ p_{λ∖k})`.
fn power_sums_to_elementary(f: &SymFunc) -> Result<SymFunc> {
    let mut singles: Vec<Option<SymFunc>> = vec![None; f.degree + 1];
    let terms: Vec<(&[usize], &Rational)> = f.coeffs.iter().map(|(p, c)| (p.parts(), c)).collect();
    horner(&terms, f.degree, &mut singles)
}

fn horner(terms: &[(&[usize], &Rational)], degree: usize, singles: &mut [Option<SymFunc>]) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::E, degree);
    let mut groups: BTreeMap<usize, Vec<(&[usize], &Rational)>> = BTreeMap::new();
    for &(parts, c) in terms {
        match parts.split_first() {
            None => out.add_term(Partition::empty(), c.clone())?,
            Some((&k, rest)) => groups.entry(k).or_default().push((rest, c)),
        }
    }
    for (k, rest) in groups {
        let inner = horner(&rest, degree - k, singles)?;
        let pk = singles[k].get_or_insert_with(|| power_sum_in_e(k));
        out = out.add(&pk.mul(&inner)?)?;
    }
    Ok(out)
}

/// `p_k = Σ_{λ ⊢ k} (−1)^{k−ℓ} k (ℓ−1)! / ∏ mᵢ! · e_λ`.
fn power_sum_in_e(k: usize) -> SymFunc {
    let factorial = |m: usize| (1..=m).fold(BigInt::one(), |acc, i| acc * i);
    let mut out = SymFunc::zero(Basis::E, k);
    for lambda in crate::partition::partitions_of(k) {
        let len = lambda.len();
        let mut denom = BigInt::one();
        let parts = lambda.parts();
        let mut i = 0;
        while i < len {
            let j = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
            denom *= factorial(j);
            i += j;
        }
        let mut c = factorial(len - 1) * k / denom;
        if (k - len) % 2 == 1 {
            c = -c;
        }
        out.coeffs.insert(lambda, Rational::from_integer(c));
    }
    out
}

/// Monomial expansion of `e_λ`.
pub fn e_to_m(lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(Basis::E, lambda.clone())
        .to_basis(Basis::M)
        .expect("conversion into m cannot fail")
}

/// Monomial expansion of `p_λ`.
pub fn p_to_m(lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(Basis::P, lambda.clone())
        .to_basis(Basis::M)
        .expect("conversion into m cannot fail")
}

/// Monomial expansion of `s_λ`: the coefficient of `m_μ` is `K(λ, μ)`.
pub fn s_to_m(lambda: &Partition, kostka: &KostkaTable) -> Result<SymFunc> {
    if kostka.degree() != lambda.weight() {
        return Err(Error::WeightMismatch { expected: kostka.degree(), found: lambda.weight() });
    }
    let t = tables(lambda.weight());
    let mut f = SymFunc::zero(Basis::M, lambda.weight());
    for mu in t.partitions() {
        let k = kostka.get(lambda, mu);
        if k != 0 {
            f.add_term(mu.clone(), Rational::from_integer(BigInt::from(k)))?;
        }
    }
    Ok(f)
}
