//! Permutations of `{1..n}` acting on the right.
//!
//! Points are 1-indexed in every textual form and 0-indexed internally. The
//! product `p * q` applies `p` first, so `i^(pq) = (i^p)^q`, and conjugation is
//! `x^g = g⁻¹ x g`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported degree; images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A bijection of `{0..degree}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 0-indexed images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(Error::DomainError(format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        let mut seen = vec![false; degree];
        for &im in &images {
            if im >= degree {
                return Err(Error::PointOutOfRange {
                    point: im + 1,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[im], true) {
                return Err(Error::RepeatedPoint { point: im + 1 });
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Builds a permutation from 0-indexed cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt >= degree {
                    return Err(Error::PointOutOfRange {
                        point: pt + 1,
                        degree,
                    });
                }
                if std::mem::replace(&mut used[pt], true) {
                    return Err(Error::RepeatedPoint { point: pt + 1 });
                }
            }
            for (k, &pt) in cycle.iter().enumerate() {
                images[pt] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses disjoint-cycle notation such as `"(1,2)(3,4,5)"`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let mut zero_based = Vec::with_capacity(cycles.len());
        for (cycle, _) in &cycles {
            let mut c = Vec::with_capacity(cycle.len());
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                c.push(pt - 1);
            }
            zero_based.push(c);
        }
        Permutation::from_cycles(degree, &zero_based)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-indexed point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.images[i] as usize == i
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &im)| i != im as usize)
            .map(|(i, _)| i)
    }

    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| !self.fixes(i)).collect()
    }

    /// Product `self * other` (apply `self`, then `other`).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        let o = &other.images;
        Permutation {
            images: self.images.iter().map(|&i| o[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()].into_boxed_slice();
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `self^g = g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        check_degree(self.degree(), g.degree())?;
        Ok(self.conj_unchecked(g))
    }

    #[inline]
    pub(crate) fn conj_unchecked(&self, g: &Permutation) -> Permutation {
        // x^g maps i^g to (i^x)^g.
        let gi = &g.images;
        let mut out = vec![0u16; self.degree()].into_boxed_slice();
        for (i, &im) in self.images.iter().enumerate() {
            out[gi[i] as usize] = gi[im as usize];
        }
        Permutation { images: out }
    }

    /// Commutator `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self.degree(), other.degree())?;
        Ok(self
            .inverse()
            .mul_unchecked(&other.inverse())
            .mul_unchecked(self)
            .mul_unchecked(other))
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let e = exp.unsigned_abs();
        // Walk each cycle once instead of repeated squaring.
        let n = self.degree();
        let mut out = vec![0u16; n].into_boxed_slice();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = base.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = base.image(j);
            }
            let len = cycle.len() as u64;
            let shift = (e % len) as usize;
            for (k, &pt) in cycle.iter().enumerate() {
                out[pt] = cycle[(k + shift) % cycle.len()] as u16;
            }
        }
        Permutation { images: out }
    }

    /// Lengths of all cycles, including fixed points, in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles_with_fixed().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.image(j);
            }
            out.push(cycle);
        }
        out
    }

    /// Non-trivial cycles (0-indexed), each starting at its smallest point,
    /// sorted by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles_with_fixed()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions % 2 == 0
    }

    /// Cycle notation with 1-indexed points; `"()"` for the identity.
    pub fn to_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, pt) in c.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&(pt + 1).to_string());
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.to_cycles(), self.degree())
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::compose`] for the checked form.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_cycles())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses `"(…)…"` with degree equal to the largest point mentioned.
    /// Prefer [`Permutation::parse_cycles`] whenever the degree is known.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let degree = cycles
            .iter()
            .flat_map(|(c, _)| c.iter().copied())
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(s, degree)
    }
}

fn check_degree(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DegreeMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Splits cycle notation into 1-indexed cycles with their starting byte offsets.
fn parse_cycle_list(text: &str) -> Result<Vec<(Vec<usize>, usize)>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let malformed = |position: usize, message: &str| Error::MalformedSyntax {
        position,
        message: message.to_string(),
    };
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(malformed(pos, "expected `(`"));
        }
        let start = pos;
        pos += 1;
        let mut cycle = Vec::new();
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b')' {
            pos += 1;
            cycles.push((cycle, start));
            continue;
        }
        loop {
            skip_ws(&mut pos);
            let num_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if num_start == pos {
                return Err(malformed(pos, "expected a point number"));
            }
            let value: usize = text[num_start..pos]
                .parse()
                .map_err(|_| malformed(num_start, "point number too large"))?;
            cycle.push(value);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                Some(_) => return Err(malformed(pos, "expected `,` or `)`")),
                None => return Err(malformed(pos, "unterminated cycle")),
            }
        }
        cycles.push((cycle, start));
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn parse_identity_forms() {
        assert!(p("()", 5).is_identity());
        assert!(p("", 5).is_identity());
        assert!(p("  ( ) ", 5).is_identity());
        assert_eq!(p("()", 5).degree(), 5);
    }

    #[test]
    fn parse_witness_cycle() {
        let x = p("(1,2)(3,4,5,6,7,8)", 8);
        assert_eq!(x.images(), vec![1, 0, 3, 4, 5, 6, 7, 2]);
        assert_eq!(x.order(), 6);
        assert_eq!(x.to_cycles(), "(1,2)(3,4,5,6,7,8)");
    }

    #[test]
    fn print_is_canonical() {
        assert_eq!(p("(1,2,3)", 3).to_cycles(), "(1,2,3)");
        assert_eq!(p("(5,4)( 3 , 1 , 2)", 6).to_cycles(), "(1,2,3)(4,5)");
        assert_eq!(p("(7)", 8).to_cycles(), "()");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Permutation::parse_cycles("(1,2,1)", 3),
            Err(Error::RepeatedPoint { point: 1 })
        );
        assert_eq!(
            Permutation::parse_cycles("(1,2)(2,3)", 3),
            Err(Error::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            Permutation::parse_cycles("(1,9)", 8),
            Err(Error::PointOutOfRange { point: 9, degree: 8 })
        );
        assert!(matches!(
            Permutation::parse_cycles("(0,1)", 3),
            Err(Error::PointOutOfRange { point: 0, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,2", 3),
            Err(Error::MalformedSyntax { .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 2)", 3),
            Err(Error::MalformedSyntax { position: 3, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("1,2", 3),
            Err(Error::MalformedSyntax { position: 0, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,,2)", 3),
            Err(Error::MalformedSyntax { position: 3, .. })
        ));
    }

    #[test]
    fn right_action_convention() {
        // (p·q) sends i to q(p(i)).
        let prod = p("(1,2,3)", 3).compose(&p("(1,2)", 3)).unwrap();
        assert_eq!(prod.image(0), 0);
        assert_eq!(prod.image(1), 2);
        assert_eq!(prod.image(2), 1);
        assert_eq!(prod, p("(2,3)", 3));
    }

    #[test]
    fn compose_basics() {
        let id = Permutation::identity(4);
        let x = p("(1,3,4)", 4);
        assert_eq!(id.compose(&x).unwrap(), x);
        let t = p("(1,2)", 4);
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(
            x.compose(&Permutation::identity(5)),
            Err(Error::DegreeMismatch { expected: 4, found: 5 })
        );
    }

    #[test]
    fn conjugation() {
        let x = p("(1,2,3)", 3);
        assert_eq!(x.conjugate(&Permutation::identity(3)).unwrap(), x);
        assert_eq!(x.conjugate(&p("(1,2)", 3)).unwrap(), p("(1,3,2)", 3));
        // x^g = g⁻¹ x g
        let g = p("(1,2)", 3);
        assert_eq!(x.conjugate(&g).unwrap(), &(&g.inverse() * &x) * &g);
    }

    #[test]
    fn powers_and_order() {
        let x = p("(1,2)(3,4,5)", 5);
        assert_eq!(x.order(), 6);
        assert!(x.pow(6).is_identity());
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(2), &x * &x);
        assert_eq!(x.pow(7), x);
        assert_eq!(x.cycle_type(), vec![3, 2]);
        assert!(!x.is_even());
    }
}
