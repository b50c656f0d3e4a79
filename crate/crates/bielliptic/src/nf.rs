//! Number fields as polynomial quotient rings Q[x]/(m(x)), deg m <= 6.
//!
//! Fields are cheap-to-clone handles; elements carry their field and a
//! coefficient vector of the residue polynomial (low degree first).
//! Arithmetic reduces modulo the monic modulus; inversion runs the
//! extended Euclidean algorithm. Only the embeddings the catalog needs
//! are wired up: Q into anything, and Q(zeta3), Q(zeta4) into Q(zeta12).

use num_bigint::BigInt;
use num_traits::Signed;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Field, Poly, Ring};
use crate::rat::{parse_rat, Rat};

#[derive(Debug)]
struct FieldRepr {
    label: String,
    /// Display symbol of the generator; empty for Q itself.
    symbol: String,
    /// Monic irreducible modulus over Q, 1 <= deg <= 6.
    modulus: Poly<Rat>,
}

/// A number field Q[x]/(m(x)). Degree 1 represents Q itself.
#[derive(Clone)]
pub struct NumberField(Arc<FieldRepr>);

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.0.label)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.label == other.0.label && self.0.modulus == other.0.modulus)
    }
}
impl Eq for NumberField {}

impl Hash for NumberField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.label.hash(state);
    }
}

fn cyclotomic_modulus(n: u32) -> Option<Poly<Rat>> {
    let c: &[i64] = match n {
        3 => &[1, 1, 1],
        4 => &[1, 0, 1],
        7 => &[1, 1, 1, 1, 1, 1, 1],
        12 => &[1, 0, -1, 0, 1],
        _ => return None,
    };
    Some(crate::poly::poly_i(c))
}

impl NumberField {
    /// The rationals, as the degree-1 quotient Q[x]/(x).
    pub fn q() -> Self {
        NumberField(Arc::new(FieldRepr {
            label: "Q".into(),
            symbol: String::new(),
            modulus: crate::poly::poly_i(&[0, 1]),
        }))
    }

    /// Q(zeta_n) for n in {3, 4, 7, 12}.
    pub fn cyclotomic(n: u32) -> Result<Self> {
        let modulus = cyclotomic_modulus(n)
            .ok_or_else(|| Error::UnknownLabel(format!("Q(zeta{n})")))?;
        Ok(NumberField(Arc::new(FieldRepr {
            label: format!("Q(zeta{n})"),
            symbol: format!("zeta{n}"),
            modulus,
        })))
    }

    /// Q(sqrt(d)) for a square-free integer d != 0, 1.
    pub fn quadratic(d: &BigInt) -> Result<Self> {
        if *d == BigInt::from(0) || *d == BigInt::from(1) {
            return Err(Error::Parse(format!("Q(sqrt({d})) is not a quadratic field")));
        }
        let modulus = Poly::new(vec![-Rat::from_integer(d.clone()), Rat::zero(), Rat::one()]);
        Ok(NumberField(Arc::new(FieldRepr {
            label: format!("Q(sqrt({d}))"),
            symbol: format!("sqrt({d})"),
            modulus,
        })))
    }

    /// Field from an explicit monic modulus; irreducibility is checked
    /// with the low-degree factorization routine.
    pub fn from_modulus(modulus: Poly<Rat>, label: &str, symbol: &str) -> Result<Self> {
        let deg = modulus.degree().ok_or_else(|| Error::Parse("zero modulus".into()))?;
        if deg == 0 || deg > 6 {
            return Err(Error::DegreeTooLarge(deg, 6));
        }
        let monic = modulus.monic();
        if deg > 1 {
            let factors = crate::factor::factor_low_degree(&monic)?;
            if factors.factors.len() != 1 || factors.factors[0].1 != 1 {
                return Err(Error::Parse(format!("modulus for {label} is reducible over Q")));
            }
        }
        Ok(NumberField(Arc::new(FieldRepr {
            label: label.to_string(),
            symbol: symbol.to_string(),
            modulus: monic,
        })))
    }

    /// Parses "Q", "Q(zetaN)" or "Q(sqrt(D))".
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        if label == "Q" {
            return Ok(Self::q());
        }
        if let Some(inner) = label.strip_prefix("Q(zeta").and_then(|s| s.strip_suffix(')')) {
            let n: u32 = inner
                .parse()
                .map_err(|_| Error::UnknownLabel(label.to_string()))?;
            return Self::cyclotomic(n);
        }
        if let Some(inner) = label.strip_prefix("Q(sqrt(").and_then(|s| s.strip_suffix("))")) {
            let d: BigInt = inner
                .parse()
                .map_err(|_| Error::UnknownLabel(label.to_string()))?;
            return Self::quadratic(&d);
        }
        Err(Error::UnknownLabel(label.to_string()))
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn symbol(&self) -> &str {
        &self.0.symbol
    }

    pub fn modulus(&self) -> &Poly<Rat> {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.degree().unwrap_or(1)
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn zero(&self) -> NFElement {
        NFElement {
            field: self.clone(),
            coeffs: vec![Rat::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> NFElement {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(&self, r: Rat) -> NFElement {
        let mut coeffs = vec![Rat::zero(); self.degree()];
        coeffs[0] = r;
        NFElement {
            field: self.clone(),
            coeffs,
        }
    }

    pub fn from_int(&self, n: i64) -> NFElement {
        self.from_rat(crate::rat::rat_i(n))
    }

    /// The generator (residue class of x). For Q this is 0.
    pub fn gen(&self) -> NFElement {
        let mut coeffs = vec![Rat::zero(); self.degree()];
        if self.degree() > 1 {
            coeffs[1] = Rat::one();
        }
        NFElement {
            field: self.clone(),
            coeffs,
        }
    }

    fn reduce(&self, p: Poly<Rat>) -> Vec<Rat> {
        let (_, r) = p.div_rem(&self.0.modulus).expect("monic modulus");
        let mut coeffs = r.coeffs;
        coeffs.resize(self.degree(), Rat::zero());
        coeffs
    }

    pub fn from_poly(&self, p: Poly<Rat>) -> NFElement {
        NFElement {
            field: self.clone(),
            coeffs: self.reduce(p),
        }
    }
}

/// Element of a number field: residue polynomial coefficients, low
/// degree first, length = degree of the field.
#[derive(Clone)]
pub struct NFElement {
    field: NumberField,
    coeffs: Vec<Rat>,
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for NFElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for NFElement {}

impl Hash for NFElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coeffs.hash(state);
    }
}

impl NFElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn as_poly(&self) -> Poly<Rat> {
        Poly::new(self.coeffs.clone())
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.label().to_string(),
                other.field.label().to_string(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("field mismatch")
    }
    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("field mismatch")
    }
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("field mismatch")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(NFElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(NFElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let prod = self.as_poly().mul(&other.as_poly());
        Ok(self.field.from_poly(prod))
    }

    pub fn neg(&self) -> Self {
        NFElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        NFElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.field.modulus().clone();
        let a = self.as_poly();
        // Bezout: find u with u*a + v*m = gcd = nonzero constant.
        let (mut r0, mut r1) = (m, a);
        let (mut s0, mut s1) = (Poly::<Rat>::zero(), Poly::constant(Rat::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        debug_assert_eq!(r0.degree(), Some(0), "modulus is irreducible");
        let c = r0.coeffs[0].inv().expect("nonzero gcd");
        Ok(self.field.from_poly(s0.scale(&c)))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.field.symbol();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != <Rat as Ring>::one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{sym}")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Embeds `x` into `target` when a canonical embedding is known:
/// identity, Q into anything, or zeta3/zeta4 into Q(zeta12).
pub fn embed(x: &NFElement, target: &NumberField) -> Option<NFElement> {
    if x.field() == target {
        return Some(x.clone());
    }
    if let Some(r) = x.as_rational() {
        return Some(target.from_rat(r));
    }
    let image = generator_image(x.field(), target)?;
    // evaluate the residue polynomial at the generator image
    let mut acc = target.zero();
    for c in x.coeffs.iter().rev() {
        acc = acc.mul(&image).add(&target.from_rat(c.clone()));
    }
    Some(acc)
}

fn generator_image(src: &NumberField, target: &NumberField) -> Option<NFElement> {
    let img = match (src.label(), target.label()) {
        // zeta3 = zeta12^4 = zeta12^2 - 1 modulo x^4 - x^2 + 1
        ("Q(zeta3)", "Q(zeta12)") => target.from_poly(crate::poly::poly_i(&[-1, 0, 1])),
        // zeta4 = zeta12^3
        ("Q(zeta4)", "Q(zeta12)") => target.from_poly(crate::poly::poly_i(&[0, 0, 0, 1])),
        _ => return None,
    };
    Some(img)
}

/// Puts two elements into a common field, extending to Q(zeta12) when
/// one side uses zeta3 and the other zeta4.
pub fn unify(a: &NFElement, b: &NFElement) -> Result<(NFElement, NFElement)> {
    if a.field() == b.field() {
        return Ok((a.clone(), b.clone()));
    }
    if let Some(bb) = embed(b, a.field()) {
        return Ok((a.clone(), bb));
    }
    if let Some(aa) = embed(a, b.field()) {
        return Ok((aa, b.clone()));
    }
    let compositum = NumberField::cyclotomic(12)?;
    match (embed(a, &compositum), embed(b, &compositum)) {
        (Some(aa), Some(bb)) => Ok((aa, bb)),
        _ => Err(Error::FieldMismatch(
            a.field().label().to_string(),
            b.field().label().to_string(),
        )),
    }
}

/// Common field for two fields, following the same rules as [`unify`].
pub fn common_field(a: &NumberField, b: &NumberField) -> Result<NumberField> {
    if a == b {
        return Ok(a.clone());
    }
    if a.is_rational() {
        return Ok(b.clone());
    }
    if b.is_rational() {
        return Ok(a.clone());
    }
    let (x, _) = unify(&a.gen(), &b.gen())?;
    Ok(x.field().clone())
}

/// The spec-level arithmetic entry point with explicit error reporting.
pub fn nf_arith(a: &NFElement, b: &NFElement, op: ArithOp) -> Result<NFElement> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

// ---------------------------------------------------------------------------
// Polynomials with number-field coefficients (used for restrictions of
// forms to lines and for gcd computations in K[Z]).
// ---------------------------------------------------------------------------

/// Dense polynomial over a number field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfPoly {
    pub field: NumberField,
    pub coeffs: Vec<NFElement>,
}

impl NfPoly {
    pub fn new(field: NumberField, mut coeffs: Vec<NFElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NfPoly { field, coeffs }
    }

    pub fn zero(field: NumberField) -> Self {
        NfPoly {
            field,
            coeffs: vec![],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> NFElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &NFElement) -> NFElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Self::new(self.field.clone(), coeffs)
    }

    pub fn mul_term(&self, c: &NFElement, k: usize) -> Self {
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().map(|a| a.mul(c)));
        Self::new(self.field.clone(), coeffs)
    }

    pub fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
        let dd = other.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = other.coeffs.last().unwrap().inv()?;
        let mut rem = self.clone();
        let mut q = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dn) = rem.degree() {
            if dn < dd {
                break;
            }
            let qc = rem.coeffs.last().unwrap().mul(&lead_inv);
            let k = dn - dd;
            rem = rem.sub(&other.mul_term(&qc, k));
            q[k] = qc;
        }
        Ok((Self::new(self.field.clone(), q), rem))
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                Self::new(
                    self.field.clone(),
                    self.coeffs.iter().map(|c| c.mul(&inv)).collect(),
                )
            }
        }
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }
}

/// Lifts a rational-coefficient polynomial into K[x].
pub fn nf_poly_from_rat(field: &NumberField, p: &Poly<Rat>) -> NfPoly {
    NfPoly::new(
        field.clone(),
        p.coeffs.iter().map(|c| field.from_rat(c.clone())).collect(),
    )
}

// ---------------------------------------------------------------------------
// Element parser
// ---------------------------------------------------------------------------

/// Parses an element expression: integers, "p/q", the field's generator
/// symbol, `+ - * / ^` and parentheses. Examples: "-3/4",
/// "zeta7^2 + zeta7", "(-1+sqrt(-7))/2".
pub fn parse_element(field: &NumberField, input: &str) -> Result<NFElement> {
    let mut p = ElemParser {
        field,
        src: input.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Parse(format!(
            "trailing input at byte {} in {input:?}",
            p.pos
        )));
    }
    Ok(v)
}

struct ElemParser<'a> {
    field: &'a NumberField,
    src: &'a [u8],
    pos: usize,
}

impl<'a> ElemParser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<NFElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NFElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.try_div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<NFElement> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| Error::Parse("bad exponent".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<NFElement> {
        self.skip_ws();
        // generator symbol matched greedily before any other token
        let sym = self.field.symbol();
        if !sym.is_empty() && self.src[self.pos..].starts_with(sym.as_bytes()) {
            self.pos += sym.len();
            return Ok(self.field.gen());
        }
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(self.field.from_rat(parse_rat(text)?))
            }
            other => Err(Error::Parse(format!(
                "unexpected token {:?} at byte {}",
                other.map(|&c| c as char),
                self.pos
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};
    use proptest::prelude::*;

    #[test]
    fn zeta4_squares_to_minus_one() {
        let k = NumberField::cyclotomic(4).unwrap();
        let i = k.gen();
        assert_eq!(i.mul(&i), k.from_int(-1));
        // 1/zeta4 = -zeta4
        assert_eq!(k.one().try_div(&i).unwrap(), i.neg());
    }

    // Independent oracle: convolution of coefficient vectors reduced
    // modulo Phi_7 by synthetic division, no NFElement arithmetic.
    fn mul_mod_phi7(a: &[i64; 6], b: &[i64; 6]) -> [i64; 6] {
        let mut prod = [0i64; 11];
        for i in 0..6 {
            for j in 0..6 {
                prod[i + j] += a[i] * b[j];
            }
        }
        // reduce: x^k = x^(k-6) * x^6 and x^6 = -(1 + x + ... + x^5)
        for k in (6..11).rev() {
            let c = prod[k];
            prod[k] = 0;
            for t in 0..6 {
                prod[k - 6 + t] -= c;
            }
        }
        let mut out = [0i64; 6];
        out.copy_from_slice(&prod[..6]);
        out
    }

    #[test]
    fn alpha_satisfies_quadratic_in_zeta7() {
        // alpha = zeta7 + zeta7^2 + zeta7^4 satisfies alpha^2 + alpha + 2 = 0.
        let a = [0i64, 1, 1, 0, 1, 0];
        let sq = mul_mod_phi7(&a, &a);
        let mut total = [2i64, 0, 0, 0, 0, 0];
        for i in 0..6 {
            total[i] += sq[i] + a[i];
        }
        assert_eq!(total, [0; 6], "independent oracle");

        let k = NumberField::cyclotomic(7).unwrap();
        let z = k.gen();
        let alpha = z.add(&z.pow(2)).add(&z.pow(4));
        let lhs = alpha.mul(&alpha).add(&alpha).add(&k.from_int(2));
        assert!(lhs.is_zero());
    }

    #[test]
    fn inverse_roundtrip_in_zeta7() {
        let k = NumberField::cyclotomic(7).unwrap();
        let x = k
            .gen()
            .pow(3)
            .add(&k.from_rat(rat(2, 5)))
            .sub(&k.gen().scale(&rat_i(7)));
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv), k.one());
    }

    #[test]
    fn embeddings_into_zeta12() {
        let k3 = NumberField::cyclotomic(3).unwrap();
        let k4 = NumberField::cyclotomic(4).unwrap();
        let k12 = NumberField::cyclotomic(12).unwrap();
        let z3 = embed(&k3.gen(), &k12).unwrap();
        // modulus of zeta3 must vanish at the image
        assert!(z3.mul(&z3).add(&z3).add(&k12.one()).is_zero());
        let z4 = embed(&k4.gen(), &k12).unwrap();
        assert!(z4.mul(&z4).add(&k12.one()).is_zero());
        // unify across zeta3/zeta4
        let (a, b) = unify(&k3.gen(), &k4.gen()).unwrap();
        assert_eq!(a.field().label(), "Q(zeta12)");
        assert_eq!(a.mul(&b).field().label(), "Q(zeta12)");
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let k3 = NumberField::cyclotomic(3).unwrap();
        let k7 = NumberField::cyclotomic(7).unwrap();
        let e = nf_arith(&k3.gen(), &k7.gen(), ArithOp::Add).unwrap_err();
        assert!(matches!(e, Error::FieldMismatch(_, _)));
        let z = k3.zero();
        assert!(matches!(
            nf_arith(&k3.gen(), &z, ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn parse_and_display() {
        let k7 = NumberField::cyclotomic(7).unwrap();
        let alpha = parse_element(&k7, "zeta7 + zeta7^2 + zeta7^4").unwrap();
        assert_eq!(alpha.to_string(), "zeta7 + zeta7^2 + zeta7^4");
        let reparsed = parse_element(&k7, &alpha.to_string()).unwrap();
        assert_eq!(reparsed, alpha);

        let ks = NumberField::from_label("Q(sqrt(-7))").unwrap();
        let a = parse_element(&ks, "(-1+sqrt(-7))/2").unwrap();
        // a^2 + a + 2 = 0
        assert!(a.mul(&a).add(&a).add(&ks.from_int(2)).is_zero());

        let q = NumberField::q();
        assert_eq!(parse_element(&q, "-3/4").unwrap(), q.from_rat(rat(-3, 4)));
    }

    #[test]
    fn label_roundtrip() {
        for label in ["Q", "Q(zeta3)", "Q(zeta7)", "Q(sqrt(-19))"] {
            let k = NumberField::from_label(label).unwrap();
            assert_eq!(k.label(), label);
        }
        assert!(NumberField::from_label("Q(zeta5)").is_err());
    }

    proptest! {
        // associativity and commutativity of multiplication in Q(zeta7)
        #[test]
        fn zeta7_mul_assoc_comm(a in proptest::collection::vec(-9i64..10, 6),
                                b in proptest::collection::vec(-9i64..10, 6),
                                c in proptest::collection::vec(-9i64..10, 6)) {
            let k = NumberField::cyclotomic(7).unwrap();
            let mk = |v: &Vec<i64>| {
                NFElement {
                    field: k.clone(),
                    coeffs: v.iter().map(|&n| rat_i(n)).collect(),
                }
            };
            let (x, y, z) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }
}
