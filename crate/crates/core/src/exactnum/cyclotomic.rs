//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element is stored at a fixed conductor `N` as its unique reduced
//! representative in `Q[x]/(Phi_N(x))`, i.e. a vector of `phi(N)` rational
//! coefficients over the power basis `1, zeta, ..., zeta^(phi(N)-1)`. Two
//! elements with the same conductor are equal iff their coefficient vectors
//! are equal; mixed conductors are compared (and combined) after promotion
//! to the least common multiple via `zeta_N = zeta_M^(M/N)`.
//!
//! There is no automatic conductor descent: results stay at the lcm of the
//! operand conductors. All values are immutable and all operations pure.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;

use super::poly::RatPoly;
use super::rational::Rational;
use crate::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// `Phi_n` by recursive exact division of `x^n - 1` by all proper `Phi_d`.
fn cyclo_poly(n: u32, memo: &mut HashMap<u32, RatPoly>) -> RatPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut result = RatPoly::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclo_poly(d, memo);
        result = result.exact_div(&phi_d);
    }
    memo.insert(n, result.clone());
    result
}

/// The `n`-th cyclotomic polynomial as integer coefficients in ascending
/// degree order; degree `phi(n)`. Panics if `n = 0`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial: n must be positive");
    let p = cyclo_poly(n, &mut HashMap::new());
    p.coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "cyclotomic polynomial must be integral");
            c.to_big().numer().clone()
        })
        .collect()
}

/// Per-conductor data: `Phi_N` and the reductions of `x^m mod Phi_N` for
/// every exponent `m` that operations can produce before reduction.
struct CondData {
    phi: usize,
    phi_poly: RatPoly,
    /// `reduction[r]` = coefficients of `x^(phi+r) mod Phi_N`.
    reduction: Vec<Vec<Rational>>,
    max_exp: usize,
}

impl CondData {
    fn compute(n: u32) -> CondData {
        let phi = euler_phi(n) as usize;
        let phi_poly = cyclo_poly(n, &mut HashMap::new());
        debug_assert_eq!(phi_poly.degree(), Some(phi));
        let max_exp = (2 * phi).saturating_sub(2).max(n as usize - 1);
        // x^phi = -(c_0 + ... + c_(phi-1) x^(phi-1)), then shift-and-fold.
        let base: Vec<Rational> = (0..phi).map(|i| -&phi_poly.coeffs()[i]).collect();
        let mut reduction = Vec::with_capacity(max_exp + 1 - phi);
        let mut cur = base.clone();
        reduction.push(cur.clone());
        for _ in phi + 1..=max_exp {
            let top = cur[phi - 1].clone();
            let mut next = vec![Rational::zero(); phi];
            for i in 0..phi {
                let shifted = if i == 0 {
                    Rational::zero()
                } else {
                    cur[i - 1].clone()
                };
                next[i] = if top.is_zero() {
                    shifted
                } else {
                    &shifted + &(&top * &base[i])
                };
            }
            cur = next;
            reduction.push(cur.clone());
        }
        CondData {
            phi,
            phi_poly,
            reduction,
            max_exp,
        }
    }
}

fn cond_data(n: u32) -> Arc<CondData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CondData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&n) {
        return d.clone();
    }
    let data = Arc::new(CondData::compute(n));
    cache.lock().unwrap().entry(n).or_insert(data).clone()
}

/// An exact element of `Q(zeta_N)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_int(n))
    }

    /// `zeta_N^k`, reduced mod `Phi_N`; `k` is taken mod `N`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as u32;
        Cyclotomic::from_terms(n, &[(k, Rational::one())])
    }

    /// `sum c_k zeta_N^(e_k)`; exponents are taken mod `N`.
    pub fn from_terms(n: u32, terms: &[(u32, Rational)]) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let data = cond_data(n);
        let mut buf = vec![Rational::zero(); data.max_exp + 1];
        for (e, c) in terms {
            let e = (e % n) as usize;
            buf[e] = &buf[e] + c;
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce_buffer(&data, buf),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients over the power basis; length `phi(conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True iff every non-constant basis coefficient vanishes.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The constant coefficient, provided the element is rational.
    pub fn to_rational(&self) -> Result<Rational> {
        if !self.is_rational() {
            return Err(Error::NotRational(self.to_string()));
        }
        Ok(self.coeffs[0].clone())
    }

    /// Re-express at conductor `m` (a multiple of the current conductor)
    /// via the standard embedding `zeta_N = zeta_M^(M/N)`.
    pub fn promote(&self, m: u32) -> Cyclotomic {
        if m == self.conductor {
            return self.clone();
        }
        assert!(
            m.is_multiple_of(self.conductor),
            "promotion target must be a multiple of the conductor"
        );
        let scale = (m / self.conductor) as usize;
        let data = cond_data(m);
        let mut buf = vec![Rational::zero(); data.max_exp + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                buf[k * scale] = c.clone();
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs: reduce_buffer(&data, buf),
        }
    }

    fn promoted_pair(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic, u32) {
        let m = self.conductor.lcm(&other.conductor);
        (self.promote(m), other.promote(m), m)
    }

    pub fn scale(&self, c: &Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N` over the rationals.
    pub fn inverse(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            let r = self.coeffs[0].recip().ok_or(Error::DivisionByZero)?;
            let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
            coeffs[0] = r;
            return Ok(Cyclotomic {
                conductor: self.conductor,
                coeffs,
            });
        }
        let data = cond_data(self.conductor);
        let a = RatPoly::from_coeffs(self.coeffs.clone());
        let (g, u, _) = a.ext_gcd(&data.phi_poly);
        debug_assert_eq!(g.degree(), Some(0), "Phi_N is irreducible over Q");
        let ginv = g.coeffs()[0].recip().expect("nonzero gcd");
        let inv = u.scale(&ginv);
        let mut buf = vec![Rational::zero(); data.max_exp + 1];
        for (k, c) in inv.coeffs().iter().enumerate() {
            buf[k] = c.clone();
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce_buffer(&data, buf),
        })
    }

    /// Complex conjugation: `zeta^k` maps to `zeta^(N-k)`, extended linearly.
    pub fn conjugate(&self) -> Cyclotomic {
        let n = self.conductor;
        let data = cond_data(n);
        let mut buf = vec![Rational::zero(); data.max_exp + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((n as usize) - k) % n as usize;
                buf[e] = &buf[e] + c;
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce_buffer(&data, buf),
        }
    }
}

/// Fold an exponent buffer (indexed by raw exponent) into the reduced
/// power-basis representation at conductor `n`.
fn reduce_buffer(data: &CondData, mut buf: Vec<Rational>) -> Vec<Rational> {
    debug_assert!(buf.len() <= data.max_exp + 1);
    for e in (data.phi..buf.len()).rev() {
        if buf[e].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut buf[e]);
        let row = &data.reduction[e - data.phi];
        for (i, r) in row.iter().enumerate() {
            if !r.is_zero() {
                buf[i] = &buf[i] + &(&c * r);
            }
        }
    }
    buf.truncate(data.phi);
    buf.resize(data.phi, Rational::zero());
    buf
}

/// Accumulate `scale * a * b` into an unreduced exponent buffer. Both
/// operands must share the buffer's conductor; the buffer must have room
/// for exponent `2*(phi-1)`. This is the hot path behind multiplication
/// and the character inner products.
pub(crate) fn mul_acc_into(buf: &mut [Rational], a: &Cyclotomic, b: &Cyclotomic, scale: &Rational) {
    debug_assert_eq!(a.conductor, b.conductor);
    if scale.is_zero() {
        return;
    }
    let b_terms: Vec<(usize, &Rational)> = b
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    if b_terms.is_empty() {
        return;
    }
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        let s = ca * scale;
        for (j, cb) in &b_terms {
            buf[i + j] = &buf[i + j] + &(&s * *cb);
        }
    }
}

/// Reduce an accumulated exponent buffer into an element at conductor `n`.
pub(crate) fn from_buffer(n: u32, buf: Vec<Rational>) -> Cyclotomic {
    let data = cond_data(n);
    let mut buf = buf;
    buf.resize(data.max_exp + 1, Rational::zero());
    Cyclotomic {
        conductor: n,
        coeffs: reduce_buffer(&data, buf),
    }
}

/// Buffer sized for products of two reduced elements at conductor `n`.
pub(crate) fn product_buffer(n: u32) -> Vec<Rational> {
    let phi = euler_phi(n) as usize;
    vec![Rational::zero(); (2 * phi).saturating_sub(1).max(1)]
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.promoted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b, _) = self.promoted_pair(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x = &*x + y;
        }
        a
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b, _) = self.promoted_pair(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x = &*x - y;
        }
        a
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        // Rational factors just scale the other operand.
        if self.is_rational() {
            let m = self.conductor.lcm(&rhs.conductor);
            return rhs.promote(m).scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            let m = self.conductor.lcm(&rhs.conductor);
            return self.promote(m).scale(&rhs.coeffs[0]);
        }
        let (a, b, m) = self.promoted_pair(rhs);
        let mut buf = product_buffer(m);
        mul_acc_into(&mut buf, &a, &b, &Rational::one());
        from_buffer(m, buf)
    }
}

macro_rules! forward_owned_cyc {
    ($($t:ident :: $m:ident),*) => {$(
        impl std::ops::$t for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                std::ops::$t::$m(&self, &rhs)
            }
        }
    )*};
}
forward_owned_cyc!(Add::add, Sub::sub, Mul::mul);

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    /// Canonical text form: `c` for the constant term, `c*z{N}^{k}` for
    /// `c*zeta_N^k`, nonzero terms joined by ` + `; `0` when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*z{}^{}", c, self.conductor, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |s: &str| Error::Parse(format!("invalid cyclotomic literal `{}`", s));
        let mut conductor: Option<u32> = None;
        let mut terms: Vec<(u32, Rational)> = Vec::new();
        for piece in s.split(" + ") {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(bad(s));
            }
            let (coeff, root) = match piece.split_once("*z") {
                Some((c, r)) => (c, Some(r)),
                None => match piece.strip_prefix('z') {
                    Some(r) => ("1", Some(r)),
                    None => (piece, None),
                },
            };
            let c: Rational = coeff.parse().map_err(|_| bad(s))?;
            match root {
                None => terms.push((0, c)),
                Some(r) => {
                    let (n_str, k_str) = r.split_once('^').ok_or_else(|| bad(s))?;
                    let n: u32 = n_str.parse().map_err(|_| bad(s))?;
                    let k: u32 = k_str.parse().map_err(|_| bad(s))?;
                    if n == 0 {
                        return Err(bad(s));
                    }
                    match conductor {
                        None => conductor = Some(n),
                        Some(m) if m == n => {}
                        Some(_) => return Err(bad(s)),
                    }
                    terms.push((k, c));
                }
            }
        }
        Ok(Cyclotomic::from_terms(conductor.unwrap_or(1), &terms))
    }
}
