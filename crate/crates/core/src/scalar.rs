//! Exact arithmetic in the number field `K = Q(i, 2^(1/4), sqrt(3))`.
//!
//! Elements are stored by their 16 rational coordinates over the basis
//! `2^(a/4) * 3^(b/2) * i^c` with `a in 0..4`, `b in 0..2`, `c in 0..2`.
//! Coordinate `a + 4*b + 8*c` holds the coefficient of that basis element.
//! The basis is linearly independent over `Q`, so equality and the zero test
//! are coordinate-wise and exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DIM: usize = 16;

const fn basis_product(x: usize, y: usize) -> (u8, i8) {
    let (a1, b1, c1) = (x % 4, (x / 4) % 2, x / 8);
    let (a2, b2, c2) = (y % 4, (y / 4) % 2, y / 8);
    let mut factor: i8 = 1;
    let mut a = a1 + a2;
    if a >= 4 {
        a -= 4;
        factor *= 2;
    }
    let mut b = b1 + b2;
    if b == 2 {
        b = 0;
        factor *= 3;
    }
    let mut c = c1 + c2;
    if c == 2 {
        c = 0;
        factor = -factor;
    }
    ((a + 4 * b + 8 * c) as u8, factor)
}

const fn structure_table() -> [[(u8, i8); DIM]; DIM] {
    let mut table = [[(0u8, 0i8); DIM]; DIM];
    let mut x = 0;
    while x < DIM {
        let mut y = 0;
        while y < DIM {
            table[x][y] = basis_product(x, y);
            y += 1;
        }
        x += 1;
    }
    table
}

/// `STRUCTURE[x][y] = (k, f)` means `e_x * e_y = f * e_k`.
static STRUCTURE: [[(u8, i8); DIM]; DIM] = structure_table();

#[inline]
pub const fn basis_index(a: usize, b: usize, c: usize) -> usize {
    a + 4 * b + 8 * c
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: [BigRational; DIM],
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement {
            coords: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut x = Self::zero();
        x.coords[0] = q;
        x
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The basis element `2^(a/4) * 3^(b/2) * i^c` scaled by `q`.
    pub fn basis(a: usize, b: usize, c: usize, q: BigRational) -> Self {
        assert!(a < 4 && b < 2 && c < 2);
        let mut x = Self::zero();
        x.coords[basis_index(a, b, c)] = q;
        x
    }

    pub fn from_coords(coords: [BigRational; DIM]) -> Self {
        FieldElement { coords }
    }

    pub fn i() -> Self {
        Self::basis(0, 0, 1, BigRational::one())
    }

    pub fn sqrt2() -> Self {
        Self::basis(2, 0, 0, BigRational::one())
    }

    pub fn sqrt3() -> Self {
        Self::basis(0, 1, 0, BigRational::one())
    }

    pub fn root4_2() -> Self {
        Self::basis(1, 0, 0, BigRational::one())
    }

    pub fn coords(&self) -> &[BigRational; DIM] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &BigRational {
        &self.coords[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// An element is real iff every coordinate carrying `i` vanishes.
    pub fn is_real(&self) -> bool {
        self.coords[8..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.coords[0])
    }

    pub fn conj(&self) -> Self {
        let mut x = self.clone();
        for q in &mut x.coords[8..] {
            *q = -q.clone();
        }
        x
    }

    /// Real part, as an element of the real subfield.
    pub fn re(&self) -> Self {
        let mut x = Self::zero();
        x.coords[..8].clone_from_slice(&self.coords[..8]);
        x
    }

    /// Imaginary part, as an element of the real subfield.
    pub fn im(&self) -> Self {
        let mut x = Self::zero();
        x.coords[..8].clone_from_slice(&self.coords[8..]);
        x
    }

    /// `|x|^2 = x * conj(x)`.
    pub fn norm_sqr(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        FieldElement {
            coords: std::array::from_fn(|k| &self.coords[k] * q),
        }
    }

    fn map_signs(&self, flip: impl Fn(usize) -> bool) -> Self {
        FieldElement {
            coords: std::array::from_fn(|k| {
                if flip(k) {
                    -self.coords[k].clone()
                } else {
                    self.coords[k].clone()
                }
            }),
        }
    }

    /// Automorphism `sqrt(3) -> -sqrt(3)`.
    fn flip_sqrt3(&self) -> Self {
        self.map_signs(|k| (k / 4) % 2 == 1)
    }

    /// Automorphism `2^(1/4) -> -2^(1/4)`.
    fn flip_root4(&self) -> Self {
        self.map_signs(|k| (k % 4) % 2 == 1)
    }

    /// `sqrt(2) -> -sqrt(2)`; only an automorphism on `Q(sqrt(2))`.
    fn flip_sqrt2(&self) -> Self {
        self.map_signs(|k| k % 4 == 2)
    }

    /// Multiplicative inverse, computed by multiplying down the tower
    /// `K > Q(2^(1/4), sqrt3) > Q(2^(1/4)) > Q(sqrt2) > Q` with conjugates.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let c0 = self.conj();
        let y1 = self * &c0;
        let c1 = y1.flip_sqrt3();
        let y2 = &y1 * &c1;
        let c2 = y2.flip_root4();
        let y3 = &y2 * &c2;
        let c3 = y3.flip_sqrt2();
        let y4 = &y3 * &c3;
        debug_assert!(y4.is_rational());
        let n = y4.coords[0].clone();
        let num = &(&(&c0 * &c1) * &c2) * &c3;
        Some(num.scale(&n.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact sign of a real element.
    pub fn sign(&self) -> Result<i8> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        if self.is_zero() {
            return Ok(0);
        }
        if let Some(q) = self.as_rational() {
            return Ok(if q.is_positive() { 1 } else { -1 });
        }
        let mut bits = 30u32;
        loop {
            let (lo, hi) = self.real_interval(bits);
            if lo.is_positive() {
                return Ok(1);
            }
            if hi.is_negative() {
                return Ok(-1);
            }
            bits *= 2;
            assert!(
                bits <= 4096,
                "sign refinement exceeded 4096 bits for a nonzero element"
            );
        }
    }

    /// Exact comparison of two real elements.
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering> {
        Ok(match (self - other).sign()? {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        })
    }

    pub fn abs_real(&self) -> Result<Self> {
        Ok(if self.sign()? < 0 { -self } else { self.clone() })
    }

    /// Rational enclosure of a real element using `bits` of precision for
    /// `2^(1/4)` and `sqrt(3)`.
    fn real_interval(&self, bits: u32) -> (BigRational, BigRational) {
        let scale = BigInt::one() << bits;
        let r2 = (BigInt::from(2) << (4 * bits)).nth_root(4);
        let r3 = (BigInt::from(3) << (2 * bits)).sqrt();
        let den = BigRational::from_integer(scale);
        let l2 = BigRational::from_integer(r2.clone()) / &den;
        let u2 = BigRational::from_integer(r2 + 1) / &den;
        let l3 = BigRational::from_integer(r3.clone()) / &den;
        let u3 = BigRational::from_integer(r3 + 1) / &den;
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for a in 0..4u32 {
            for b in 0..2u32 {
                let q = &self.coords[basis_index(a as usize, b as usize, 0)];
                if q.is_zero() {
                    continue;
                }
                let blo = num_traits::pow(l2.clone(), a as usize) * num_traits::pow(l3.clone(), b as usize);
                let bhi = num_traits::pow(u2.clone(), a as usize) * num_traits::pow(u3.clone(), b as usize);
                if q.is_positive() {
                    lo += q * &blo;
                    hi += q * &bhi;
                } else {
                    lo += q * &bhi;
                    hi += q * &blo;
                }
            }
        }
        (lo, hi)
    }

    pub fn to_complex64(&self) -> Complex64 {
        let r2 = 2f64.powf(0.25);
        let r3 = 3f64.sqrt();
        let mut z = Complex64::new(0.0, 0.0);
        for (k, q) in self.coords.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let (a, b, c) = (k % 4, (k / 4) % 2, k / 8);
            let v = q.to_f64().unwrap_or(f64::NAN) * r2.powi(a as i32) * r3.powi(b as i32);
            if c == 0 {
                z.re += v;
            } else {
                z.im += v;
            }
        }
        z
    }

    pub fn to_f64(&self) -> f64 {
        self.to_complex64().re
    }

    /// Square root in `K`, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        let r = sqrt_at_level(self, 4)?;
        debug_assert!(&r * &r == *self);
        Some(r)
    }

    /// Positive square root of a positive real element, if it lies in `K`.
    pub fn sqrt_positive(&self) -> Option<Self> {
        let r = self.sqrt()?;
        if !r.is_real() {
            return None;
        }
        match r.sign().ok()? {
            -1 => Some(-r),
            _ => Some(r),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        crate::parse::parse_scalar(text)
    }
}

/// Generator `g` of level `level` over level `level - 1` and `g^2`.
/// Levels: 0 = Q, 1 = Q(sqrt2), 2 = Q(2^(1/4)), 3 = Q(2^(1/4), sqrt3), 4 = K.
fn level_generator(level: u8) -> (FieldElement, FieldElement) {
    match level {
        1 => (FieldElement::sqrt2(), FieldElement::from_int(2)),
        2 => (FieldElement::root4_2(), FieldElement::sqrt2()),
        3 => (FieldElement::sqrt3(), FieldElement::from_int(3)),
        4 => (FieldElement::i(), FieldElement::from_int(-1)),
        _ => unreachable!(),
    }
}

/// Split `x` in level `level` as `a + b*g` with `a`, `b` in level `level - 1`.
fn split_level(x: &FieldElement, level: u8) -> (FieldElement, FieldElement) {
    let mut a = FieldElement::zero();
    let mut b = FieldElement::zero();
    for (k, q) in x.coords.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let (ea, eb, ec) = (k % 4, (k / 4) % 2, k / 8);
        let (in_b, target) = match level {
            1 => (ea == 2, basis_index(0, 0, 0)),
            2 => (ea % 2 == 1, basis_index(ea - ea % 2, eb, ec)),
            3 => (eb == 1, basis_index(ea, 0, ec)),
            4 => (ec == 1, basis_index(ea, eb, 0)),
            _ => unreachable!(),
        };
        if in_b {
            b.coords[target] = q.clone();
        } else {
            a.coords[k] = q.clone();
        }
    }
    (a, b)
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

fn sqrt_at_level(x: &FieldElement, level: u8) -> Option<FieldElement> {
    if x.is_zero() {
        return Some(FieldElement::zero());
    }
    if level == 0 {
        return rational_sqrt(&x.coords[0]).map(FieldElement::from_rational);
    }
    let (a, b) = split_level(x, level);
    let (g, d) = level_generator(level);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if b.is_zero() {
        if let Some(r) = sqrt_at_level(&a, level - 1) {
            return Some(r);
        }
        let r = sqrt_at_level(&(&a * &d.inv()?), level - 1)?;
        return Some(&r * &g);
    }
    let norm = &(&a * &a) - &(&(&d * &b) * &b);
    let n = sqrt_at_level(&norm, level - 1)?;
    for candidate in [&a + &n, &a - &n] {
        let p2 = candidate.scale(&half);
        if let Some(p) = sqrt_at_level(&p2, level - 1) {
            if p.is_zero() {
                continue;
            }
            let q = &b * &(p.scale(&BigRational::from_integer(BigInt::from(2)))).inv()?;
            let r = &p + &(&q * &g);
            if &r * &r == *x {
                return Some(r);
            }
        }
    }
    None
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coords: std::array::from_fn(|k| &self.coords[k] + &rhs.coords[k]),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement {
            coords: std::array::from_fn(|k| &self.coords[k] - &rhs.coords[k]),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        let mut out = FieldElement::zero();
        for (x, qx) in self.coords.iter().enumerate() {
            if qx.is_zero() {
                continue;
            }
            for (y, qy) in rhs.coords.iter().enumerate() {
                if qy.is_zero() {
                    continue;
                }
                let (k, f) = STRUCTURE[x][y];
                let prod = qx * qy;
                let term = if f == 1 {
                    prod
                } else {
                    prod * BigInt::from(f)
                };
                out.coords[k as usize] += term;
            }
        }
        out
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero in K")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            coords: std::array::from_fn(|k| -self.coords[k].clone()),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.coords.iter_mut().zip(rhs.coords.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.coords.iter_mut().zip(rhs.coords.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = FieldElement>>(iter: I) -> Self {
        let mut acc = FieldElement::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

fn basis_name(k: usize) -> String {
    let (a, b, c) = (k % 4, (k / 4) % 2, k / 8);
    let mut parts: Vec<&str> = Vec::new();
    match (a, b) {
        (0, 0) => {}
        (1, 0) => parts.push("root4(2)"),
        (2, 0) => parts.push("sqrt(2)"),
        (3, 0) => parts.extend(["root4(2)", "sqrt(2)"]),
        (0, 1) => parts.push("sqrt(3)"),
        (1, 1) => parts.extend(["root4(2)", "sqrt(3)"]),
        (2, 1) => parts.push("sqrt(6)"),
        (3, 1) => parts.extend(["root4(2)", "sqrt(6)"]),
        _ => unreachable!(),
    }
    if c == 1 {
        parts.push("i");
    }
    parts.join("*")
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldElement {
    /// Prints in the scalar grammar, e.g. `1-3/4*sqrt(2)*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, q) in self.coords.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let name = basis_name(k);
            let neg = q.numer().sign() == Sign::Minus;
            let mag = q.abs();
            let body = if name.is_empty() {
                format_rational(&mag)
            } else if mag.is_one() {
                name
            } else {
                format!("{}*{}", format_rational(&mag), name)
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({self})")
    }
}

impl FromStr for FieldElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    #[test]
    fn basis_products() {
        assert_eq!(FieldElement::sqrt2() * FieldElement::sqrt3(), k("sqrt(6)"));
        assert_eq!(FieldElement::root4_2() * FieldElement::root4_2(), FieldElement::sqrt2());
        assert_eq!(k("1+i") * k("1-i"), FieldElement::from_int(2));
        assert_eq!(FieldElement::i() * FieldElement::i(), FieldElement::from_int(-1));
        assert_eq!(FieldElement::root4_2().pow(4), FieldElement::from_int(2));
    }

    #[test]
    fn signs() {
        assert_eq!(FieldElement::zero().sign().unwrap(), 0);
        assert_eq!(k("sqrt(2)-1").sign().unwrap(), 1);
        assert_eq!(k("1-root4(2)*sqrt(3)").sign().unwrap(), -1);
        assert_eq!(k("1+i").sign(), Err(Error::NotReal));
        // 2^(3/4) - 5/3 is about 0.0151
        assert_eq!(k("root4(2)*sqrt(2)-5/3").sign().unwrap(), 1);
    }

    #[test]
    fn inverse_and_sqrt() {
        let x = k("1+root4(2)-2*sqrt(3)*i+3/7*sqrt(6)");
        assert!((&x * &x.inv().unwrap()).is_one());
        assert!(FieldElement::zero().inv().is_none());
        assert_eq!(k("2").sqrt_positive().unwrap(), FieldElement::sqrt2());
        assert_eq!(k("sqrt(2)").sqrt_positive().unwrap(), FieldElement::root4_2());
        assert_eq!(k("3/4").sqrt_positive().unwrap(), k("1/2*sqrt(3)"));
        let y = k("1+2*i-root4(2)");
        let sq = &y * &y;
        let r = sq.sqrt().unwrap();
        assert!(r == y || r == -&y);
        assert!(k("5").sqrt().is_none());
        assert!(k("-1").sqrt().is_some());
        assert_eq!(k("19/16").sqrt(), None);
    }

    #[test]
    fn print_parse_round_trip() {
        for s in ["0", "1", "-3/4", "sqrt(2)*i", "1-root4(2)*sqrt(6)*i", "-i+2*sqrt(3)"] {
            let x = k(s);
            assert_eq!(k(&x.to_string()), x);
        }
        assert_eq!(k("sqrt(2)*i").to_string(), "sqrt(2)*i");
    }
}
