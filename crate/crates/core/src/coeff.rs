//! Exact arithmetic in the coefficient ring.
//!
//! A [`RingSpec`] describes the ring and performs all arithmetic on bare
//! [`Coeff`] values. Containers (elements, maps, tables) store `Coeff`s and
//! carry the ring once. [`RingElement`] pairs a value with its ring and
//! rejects mixed-ring operands.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring of a quotient `R[t]/(f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    /// `Z/m` with `m >= 2`.
    IntegersMod(BigInt),
    /// `R[var]/(modulus)`; `modulus` is monic, lowest coefficient first.
    Quotient {
        base: BaseRing,
        var: String,
        modulus: Vec<BigRational>,
        irreducible: bool,
    },
}

/// Canonical representation of a ring element, interpreted by a [`RingSpec`].
///
/// Integers and residues mod `m` use `Int` (residues in `[0, m)`), rationals
/// use `Rat` (always reduced), quotient rings use `Poly` with the
/// coefficients of the remainder, lowest degree first and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Poly(Vec<BigRational>),
}

#[derive(Clone, Debug)]
pub struct RingSpec(Arc<RingKind>);

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for RingSpec {}

impl RingSpec {
    pub fn new(kind: RingKind) -> Result<Self> {
        match &kind {
            RingKind::IntegersMod(m) if *m < BigInt::from(2) => {
                return Err(Error::RingSyntax(format!("Z/{m}"), "modulus must be at least 2".into()));
            }
            RingKind::Quotient { base, modulus, irreducible, .. } => {
                if modulus.len() < 2 || !modulus.last().is_some_and(|c| c.is_one()) {
                    return Err(Error::RingSyntax(
                        format!("{kind:?}"),
                        "quotient modulus must be monic of degree at least 1".into(),
                    ));
                }
                if *base == BaseRing::Integers && modulus.iter().any(|c| !c.is_integer()) {
                    return Err(Error::RingSyntax(
                        format!("{kind:?}"),
                        "integer quotient needs integer modulus coefficients".into(),
                    ));
                }
                if *base == BaseRing::Integers && *irreducible {
                    return Err(Error::RingSyntax(
                        format!("{kind:?}"),
                        "an integer quotient ring is never a field".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(RingSpec(Arc::new(kind)))
    }

    pub fn integers() -> Self {
        RingSpec(Arc::new(RingKind::Integers))
    }

    pub fn rationals() -> Self {
        RingSpec(Arc::new(RingKind::Rationals))
    }

    pub fn integers_mod(m: u64) -> Result<Self> {
        Self::new(RingKind::IntegersMod(BigInt::from(m)))
    }

    /// `Z[q]/(1 + q + ... + q^{n-1})`, the cyclotomic quotient for a prime `n`.
    pub fn cyclotomic(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RingSyntax(format!("Phi_{n}"), "need n >= 2".into()));
        }
        Self::new(RingKind::Quotient {
            base: BaseRing::Integers,
            var: "q".into(),
            modulus: vec![BigRational::one(); n],
            irreducible: false,
        })
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn is_field(&self) -> bool {
        match &*self.0 {
            RingKind::Integers => false,
            RingKind::Rationals => true,
            RingKind::IntegersMod(m) => is_prime(m),
            RingKind::Quotient { base, irreducible, .. } => *base == BaseRing::Rationals && *irreducible,
        }
    }

    pub fn zero(&self) -> Coeff {
        match &*self.0 {
            RingKind::Integers | RingKind::IntegersMod(_) => Coeff::Int(BigInt::zero()),
            RingKind::Rationals => Coeff::Rat(BigRational::zero()),
            RingKind::Quotient { .. } => Coeff::Poly(Vec::new()),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_bigint(BigInt::one())
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        self.from_bigint(BigInt::from(n))
    }

    /// Image of `n` under the unique ring map from the integers.
    pub fn from_bigint(&self, n: BigInt) -> Coeff {
        match &*self.0 {
            RingKind::Integers => Coeff::Int(n),
            RingKind::IntegersMod(m) => Coeff::Int(n.mod_floor(m)),
            RingKind::Rationals => Coeff::Rat(BigRational::from_integer(n)),
            RingKind::Quotient { .. } => {
                let mut v = vec![BigRational::from_integer(n)];
                trim(&mut v);
                Coeff::Poly(v)
            }
        }
    }

    /// The adjoined variable of a quotient ring.
    pub fn generator(&self) -> Option<Coeff> {
        match &*self.0 {
            RingKind::Quotient { modulus, .. } => {
                let mut v = vec![BigRational::zero(), BigRational::one()];
                reduce_mod(&mut v, modulus);
                Some(Coeff::Poly(v))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Int(x) => x.is_zero(),
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Poly(x) => x.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => self.reduce_int(x + y),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Coeff::Poly(x), Coeff::Poly(y)) => Coeff::Poly(poly_add(x, y)),
            _ => representation_mismatch(),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Int(x) => self.reduce_int(-x),
            Coeff::Rat(x) => Coeff::Rat(-x),
            Coeff::Poly(x) => Coeff::Poly(x.iter().map(|c| -c).collect()),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Int(x), Coeff::Int(y)) => self.reduce_int(x * y),
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Coeff::Poly(x), Coeff::Poly(y)) => {
                let RingKind::Quotient { modulus, .. } = &*self.0 else {
                    representation_mismatch()
                };
                let mut prod = poly_mul(x, y);
                reduce_mod(&mut prod, modulus);
                Coeff::Poly(prod)
            }
            _ => representation_mismatch(),
        }
    }

    pub fn pow(&self, a: &Coeff, k: u32) -> Coeff {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; only available over fields.
    pub fn inverse(&self, a: &Coeff) -> Result<Coeff> {
        if !self.is_field() {
            return Err(Error::NotAField(self.to_string()));
        }
        if self.is_zero(a) {
            return Err(Error::NotInvertible(self.format(a), self.to_string()));
        }
        match (&*self.0, a) {
            (RingKind::Rationals, Coeff::Rat(x)) => Ok(Coeff::Rat(x.recip())),
            (RingKind::IntegersMod(m), Coeff::Int(x)) => {
                let g = x.extended_gcd(m);
                if !g.gcd.is_one() {
                    return Err(Error::NotInvertible(x.to_string(), self.to_string()));
                }
                Ok(Coeff::Int(g.x.mod_floor(m)))
            }
            (RingKind::Quotient { modulus, .. }, Coeff::Poly(x)) => poly_inverse(x, modulus)
                .map(Coeff::Poly)
                .ok_or_else(|| Error::NotInvertible(self.format(a), self.to_string())),
            _ => representation_mismatch(),
        }
    }

    /// Checks that `a` uses this ring's representation and is canonical.
    pub fn is_canonical(&self, a: &Coeff) -> bool {
        match (&*self.0, a) {
            (RingKind::Integers, Coeff::Int(_)) => true,
            (RingKind::IntegersMod(m), Coeff::Int(x)) => !x.is_negative() && x < m,
            (RingKind::Rationals, Coeff::Rat(_)) => true,
            (RingKind::Quotient { base, modulus, .. }, Coeff::Poly(v)) => {
                v.len() < modulus.len()
                    && v.last().is_none_or(|c| !c.is_zero())
                    && (*base == BaseRing::Rationals || v.iter().all(|c| c.is_integer()))
            }
            _ => false,
        }
    }

    /// Brings `a` into canonical form for this ring (idempotent).
    pub fn normalize(&self, a: Coeff) -> Result<Coeff> {
        match (&*self.0, a) {
            (RingKind::Integers, c @ Coeff::Int(_)) => Ok(c),
            (RingKind::IntegersMod(m), Coeff::Int(x)) => Ok(Coeff::Int(x.mod_floor(m))),
            (RingKind::Rationals, c @ Coeff::Rat(_)) => Ok(c),
            (RingKind::Rationals, Coeff::Int(x)) => Ok(Coeff::Rat(BigRational::from_integer(x))),
            (RingKind::Quotient { base, modulus, .. }, Coeff::Poly(mut v)) => {
                if *base == BaseRing::Integers && v.iter().any(|c| !c.is_integer()) {
                    return Err(Error::CoeffSyntax(format!("{v:?}"), self.to_string()));
                }
                reduce_mod(&mut v, modulus);
                Ok(Coeff::Poly(v))
            }
            (RingKind::Quotient { .. }, Coeff::Int(x)) => Ok(self.from_bigint(x)),
            (_, other) => Err(Error::CoeffSyntax(format!("{other:?}"), self.to_string())),
        }
    }

    /// Human-readable rendering, e.g. `-3`, `2/5`, `-q - 1`.
    pub fn format(&self, a: &Coeff) -> String {
        match a {
            Coeff::Int(x) => x.to_string(),
            Coeff::Rat(x) => format_rational(x),
            Coeff::Poly(v) => {
                let var = match &*self.0 {
                    RingKind::Quotient { var, .. } => var.as_str(),
                    _ => "t",
                };
                format_poly(v, var)
            }
        }
    }

    /// Token used by the algebra-spec file format; inverse of [`RingSpec::parse_coeff`].
    pub fn token(&self, a: &Coeff) -> String {
        match a {
            Coeff::Poly(v) if v.is_empty() => "(0)".into(),
            Coeff::Poly(v) => {
                let parts: Vec<String> = v.iter().map(format_rational).collect();
                format!("({})", parts.join(","))
            }
            other => self.format(other),
        }
    }

    /// Parses a coefficient token: an integer, a fraction (rational rings),
    /// or `(c0,c1,...)` for quotient rings.
    pub fn parse_coeff(&self, s: &str) -> Result<Coeff> {
        let bad = || Error::CoeffSyntax(s.to_string(), self.to_string());
        let s = s.trim();
        match &*self.0 {
            RingKind::Integers | RingKind::IntegersMod(_) => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(self.from_bigint(n))
            }
            RingKind::Rationals => Ok(Coeff::Rat(parse_rational(s).ok_or_else(bad)?)),
            RingKind::Quotient { base, .. } => {
                let v: Vec<BigRational> = if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                    inner
                        .split(',')
                        .map(|p| parse_rational(p.trim()))
                        .collect::<Option<_>>()
                        .ok_or_else(bad)?
                } else {
                    vec![parse_rational(s).ok_or_else(bad)?]
                };
                if *base == BaseRing::Integers && v.iter().any(|c| !c.is_integer()) {
                    return Err(bad());
                }
                self.normalize(Coeff::Poly(v))
            }
        }
    }

    fn reduce_int(&self, x: BigInt) -> Coeff {
        match &*self.0 {
            RingKind::IntegersMod(m) => Coeff::Int(x.mod_floor(m)),
            _ => Coeff::Int(x),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::IntegersMod(m) => write!(f, "Z/{m}"),
            RingKind::Quotient { base, var, modulus, irreducible } => {
                let b = match base {
                    BaseRing::Integers => "Z",
                    BaseRing::Rationals => "Q",
                };
                let cs: Vec<String> = modulus.iter().map(format_rational).collect();
                write!(f, "{b}[{var}]/({})", cs.join(","))?;
                if *irreducible {
                    write!(f, ":field")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Grammar: `Z`, `Q`, `Z/<m>`, `Z[q]/(c0,c1,...,1)`, `Q[t]/(c0,...,1)`,
    /// the latter optionally suffixed with `:field` to assert irreducibility.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = |msg: &str| Error::RingSyntax(text.to_string(), msg.to_string());
        match text {
            "Z" | "ZZ" => return Ok(RingSpec::integers()),
            "Q" | "QQ" => return Ok(RingSpec::rationals()),
            _ => {}
        }
        if let Some(m) = text.strip_prefix("Z/") {
            let m = BigInt::from_str(m.trim()).map_err(|_| bad("modulus is not an integer"))?;
            return RingSpec::new(RingKind::IntegersMod(m));
        }
        let (body, irreducible) = match text.strip_suffix(":field") {
            Some(b) => (b, true),
            None => (text, false),
        };
        let base = match body.get(..1) {
            Some("Z") => BaseRing::Integers,
            Some("Q") => BaseRing::Rationals,
            _ => return Err(bad("unknown ring")),
        };
        let rest = &body[1..];
        let rest = rest.strip_prefix('[').ok_or_else(|| bad("expected `[`"))?;
        let (var, rest) = rest.split_once(']').ok_or_else(|| bad("expected `]`"))?;
        if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphabetic()) {
            return Err(bad("variable must be alphabetic"));
        }
        let inner = rest
            .strip_prefix("/(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected `/(c0,...,1)`"))?;
        let modulus = inner
            .split(',')
            .map(|p| parse_rational(p.trim()))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad("bad modulus coefficient"))?;
        RingSpec::new(RingKind::Quotient { base, var: var.to_string(), modulus, irreducible })
    }
}

/// A ring value bundled with its ring; arithmetic rejects mixed-ring operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    ring: RingSpec,
    value: Coeff,
}

impl RingElement {
    pub fn new(ring: &RingSpec, value: Coeff) -> Result<Self> {
        let value = ring.normalize(value)?;
        Ok(RingElement { ring: ring.clone(), value })
    }

    pub(crate) fn from_canonical(ring: &RingSpec, value: Coeff) -> Self {
        RingElement { ring: ring.clone(), value }
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Self::from_canonical(ring, ring.zero())
    }

    pub fn one(ring: &RingSpec) -> Self {
        Self::from_canonical(ring, ring.one())
    }

    /// Image of `n` under the canonical map from the integers.
    pub fn from_int(n: i64, ring: &RingSpec) -> Self {
        Self::from_canonical(ring, ring.from_int(n))
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn value(&self) -> &Coeff {
        &self.value
    }

    pub fn into_value(self) -> Coeff {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.value)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_canonical(&self.ring, self.ring.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_canonical(&self.ring, self.ring.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_canonical(&self.ring, self.ring.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> Self {
        Self::from_canonical(&self.ring, self.ring.neg(&self.value))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::from_canonical(&self.ring, self.ring.pow(&self.value, k))
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self::from_canonical(&self.ring, self.ring.inverse(&self.value)?))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}

/// `C(k, r)`, zero when `r > k`.
pub fn binomial(k: u64, r: u64) -> BigInt {
    if r > k {
        return BigInt::zero();
    }
    let r = r.min(k - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    acc
}

fn representation_mismatch() -> ! {
    panic!("coefficient representation does not match its ring")
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(BigRational::from_integer),
    }
}

fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn format_poly(v: &[BigRational], var: &str) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (deg, c) in v.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let monomial = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        if deg == 0 {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&format!("{}*{monomial}", format_rational(&mag)));
        }
    }
    out
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => BigRational::zero(),
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Reduces `v` modulo the monic polynomial `modulus` in place.
fn reduce_mod(v: &mut Vec<BigRational>, modulus: &[BigRational]) {
    let d = modulus.len() - 1;
    while v.len() > d {
        let top = v.len() - 1;
        let c = v[top].clone();
        if !c.is_zero() {
            for (i, m) in modulus.iter().enumerate().take(d) {
                v[top - d + i] -= &c * m;
            }
        }
        v.pop();
    }
    trim(v);
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let top = rem.len() - 1;
        let c = &rem[top] / &lead;
        let shift = top - db;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let nb: Vec<BigRational> = b.iter().map(|c| -c).collect();
    poly_add(a, &nb)
}

/// Inverse of `a` modulo `modulus` over the rationals, if `gcd(a, modulus)` is constant.
fn poly_inverse(a: &[BigRational], modulus: &[BigRational]) -> Option<Vec<BigRational>> {
    let (mut r0, mut r1) = (modulus.to_vec(), a.to_vec());
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut inv: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
    reduce_mod(&mut inv, modulus);
    Some(inv)
}

/// Miller-Rabin with the first twelve prime bases; deterministic below 3.3e24.
pub(crate) fn is_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> RingSpec {
        s.parse().unwrap()
    }

    #[test]
    fn integer_and_modular_examples() {
        let z = RingSpec::integers();
        assert_eq!(z.add(&z.from_int(2), &z.from_int(3)), z.from_int(5));
        let z5 = ring("Z/5");
        assert_eq!(z5.mul(&z5.from_int(3), &z5.from_int(4)), z5.from_int(2));
        assert_eq!(z5.from_int(7), Coeff::Int(BigInt::from(2)));
        assert_eq!(z5.from_int(-1), Coeff::Int(BigInt::from(4)));
    }

    #[test]
    fn cyclotomic_cube_root_of_unity() {
        let r = ring("Z[q]/(1,1,1)");
        assert_eq!(r, RingSpec::cyclotomic(3).unwrap());
        let q = r.generator().unwrap();
        let q2 = r.mul(&q, &q);
        // q^2 = -q - 1
        let expected = r.sub(&r.neg(&q), &r.one());
        assert_eq!(q2, expected);
        assert_eq!(r.format(&q2), "-q - 1");
        assert!(r.is_one(&r.pow(&q, 3)));
        assert!(r.is_zero(&r.add(&r.add(&r.one(), &q), &q2)));
        assert_eq!(r.from_int(-1), Coeff::Poly(vec![BigRational::from_integer((-1).into())]));
    }

    #[test]
    fn field_detection() {
        assert!(RingSpec::rationals().is_field());
        assert!(!RingSpec::integers().is_field());
        assert!(ring("Z/7").is_field());
        assert!(!ring("Z/6").is_field());
        assert!(!ring("Z[q]/(1,1,1)").is_field());
        assert!(ring("Q[t]/(1,0,1):field").is_field());
        assert!(!ring("Q[t]/(1,0,1)").is_field());
        assert!(is_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_prime(&BigInt::from(561)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 1), BigInt::from(3));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn inverses_over_fields() {
        let z7 = ring("Z/7");
        let inv = z7.inverse(&z7.from_int(3)).unwrap();
        assert!(z7.is_one(&z7.mul(&inv, &z7.from_int(3))));
        let gaussian = ring("Q[i]/(1,0,1):field");
        let i = gaussian.generator().unwrap();
        let x = gaussian.add(&gaussian.one(), &i);
        let inv = gaussian.inverse(&x).unwrap();
        assert!(gaussian.is_one(&gaussian.mul(&x, &inv)));
        assert!(matches!(RingSpec::integers().inverse(&RingSpec::integers().from_int(2)), Err(Error::NotAField(_))));
        assert!(z7.inverse(&z7.zero()).is_err());
    }

    #[test]
    fn ring_grammar_round_trips() {
        for s in ["Z", "Q", "Z/5", "Z[q]/(1,1,1)", "Q[t]/(-2,0,1)", "Q[t]/(1,0,1):field"] {
            assert_eq!(ring(s).to_string(), s);
        }
        for bad in ["Z/1", "Z[q]/(1,2)", "Z[q]/(1)", "R", "Z[q]/(1,1,1):field", "Z[1]/(1,1)"] {
            assert!(bad.parse::<RingSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn coefficient_tokens_round_trip() {
        let r = ring("Z[q]/(1,1,1)");
        let c = r.parse_coeff("(0,-1)").unwrap();
        assert_eq!(r.parse_coeff(&r.token(&c)).unwrap(), c);
        assert_eq!(r.parse_coeff("(0,0,1)").unwrap(), r.parse_coeff("(-1,-1)").unwrap());
        assert!(r.parse_coeff("(1/2)").is_err());
        let q = RingSpec::rationals();
        assert_eq!(q.format(&q.parse_coeff("6/4").unwrap()), "3/2");
    }

    #[test]
    fn mixed_ring_operands_are_rejected() {
        let a = RingElement::from_int(2, &RingSpec::integers());
        let b = RingElement::from_int(2, &ring("Z/5"));
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(..))));
        assert_eq!(a.add(&a).unwrap().to_string(), "4");
    }
}
