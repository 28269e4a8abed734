use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Algebra, Blade, Error};

/// A multivector: finitely many blade terms with f64 coefficients, tagged by
/// its algebra. Terms with coefficient exactly 0.0 are never stored, so two
/// multivectors are `==` iff they agree term for term.
#[derive(Clone, PartialEq, Debug)]
pub struct Multivector {
    algebra: Algebra,
    terms: BTreeMap<Blade, f64>,
}

impl Multivector {
    pub fn zero(algebra: Algebra) -> Multivector {
        Multivector {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(algebra: Algebra, value: f64) -> Multivector {
        let mut mv = Multivector::zero(algebra);
        mv.set(Blade::SCALAR, value);
        mv
    }

    /// Basis vector e_i.
    pub fn basis_vector(algebra: Algebra, i: usize) -> Multivector {
        assert!(
            (i as u32) < algebra.dim(),
            "generator index {i} out of range for {algebra}"
        );
        let mut mv = Multivector::zero(algebra);
        mv.set(Blade::from_indices(&[i]).unwrap(), 1.0);
        mv
    }

    /// Unit basis blade from strictly ascending generator indices.
    pub fn basis_blade(algebra: Algebra, indices: &[usize]) -> Multivector {
        let blade = Blade::from_indices(indices).expect("strictly ascending indices");
        for i in indices {
            assert!(
                (*i as u32) < algebra.dim(),
                "generator index {i} out of range for {algebra}"
            );
        }
        let mut mv = Multivector::zero(algebra);
        mv.set(blade, 1.0);
        mv
    }

    /// Unit pseudoscalar of the algebra.
    pub fn pseudoscalar(algebra: Algebra) -> Multivector {
        let mut mv = Multivector::zero(algebra);
        mv.set(algebra.pseudoscalar_blade(), 1.0);
        mv
    }

    pub fn from_terms<I>(algebra: Algebra, terms: I) -> Multivector
    where
        I: IntoIterator<Item = (Blade, f64)>,
    {
        let mut mv = Multivector::zero(algebra);
        for (blade, c) in terms {
            mv.add_term(blade, c);
        }
        mv
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coeff(&self, blade: Blade) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    /// Coefficient addressed by generator indices, for readable tests.
    pub fn coeff_at(&self, indices: &[usize]) -> f64 {
        self.coeff(Blade::from_indices(indices).expect("strictly ascending indices"))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every stored term has the given grade; the zero multivector
    /// is vacuously homogeneous of any grade.
    pub fn is_homogeneous(&self, grade: u32) -> bool {
        self.terms.keys().all(|b| b.grade() == grade)
    }

    /// True when every stored term has even grade.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    /// Largest coefficient magnitude, 0 for the zero multivector. This is the
    /// residual norm used throughout the verification suites.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.algebra == other.algebra && self.sub(other).max_abs() <= tol
    }

    fn set(&mut self, blade: Blade, c: f64) {
        if c == 0.0 {
            self.terms.remove(&blade);
        } else {
            self.terms.insert(blade, c);
        }
    }

    fn add_term(&mut self, blade: Blade, c: f64) {
        let sum = self.coeff(blade) + c;
        self.set(blade, sum);
    }

    pub fn scale(&self, factor: f64) -> Multivector {
        Multivector::from_terms(self.algebra, self.terms().map(|(b, c)| (b, c * factor)))
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        self.check_same_algebra(other);
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c);
        }
        out
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.check_same_algebra(other);
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, -c);
        }
        out
    }

    pub fn neg(&self) -> Multivector {
        self.scale(-1.0)
    }

    fn check_same_algebra(&self, other: &Multivector) {
        assert_eq!(
            self.algebra, other.algebra,
            "operands live in different algebras"
        );
    }

    /// Full geometric product. Mixing algebras is a caller bug and panics.
    pub fn geometric_product(&self, other: &Multivector) -> Multivector {
        self.check_same_algebra(other);
        let mut terms: BTreeMap<Blade, f64> = BTreeMap::new();
        for (ba, ca) in self.terms() {
            for (bb, cb) in other.terms() {
                let (sign, blade) = self.algebra.blade_product(ba, bb);
                if sign != 0.0 {
                    *terms.entry(blade).or_insert(0.0) += sign * ca * cb;
                }
            }
        }
        let mut out = Multivector::zero(self.algebra);
        for (blade, c) in terms {
            out.set(blade, c);
        }
        out
    }

    /// Outer (wedge) product, the grade-(r+s) part of the geometric product.
    /// Blade-wise that is exactly the disjoint-mask terms.
    pub fn outer(&self, other: &Multivector) -> Multivector {
        self.check_same_algebra(other);
        let mut terms: BTreeMap<Blade, f64> = BTreeMap::new();
        for (ba, ca) in self.terms() {
            for (bb, cb) in other.terms() {
                if ba.mask() & bb.mask() != 0 {
                    continue;
                }
                let (sign, blade) = self.algebra.blade_product(ba, bb);
                *terms.entry(blade).or_insert(0.0) += sign * ca * cb;
            }
        }
        let mut out = Multivector::zero(self.algebra);
        for (blade, c) in terms {
            out.set(blade, c);
        }
        out
    }

    /// Metric inner product of two vectors, the scalar part of (ab+ba)/2.
    /// Errors unless both arguments are pure grade 1.
    pub fn inner_vectors(&self, other: &Multivector) -> Result<f64, Error> {
        self.check_same_algebra(other);
        if !self.is_homogeneous(1) || !other.is_homogeneous(1) {
            return Err(Error::WrongGrade { expected: 1 });
        }
        let ab = self.geometric_product(other);
        let ba = other.geometric_product(self);
        Ok((ab.coeff(Blade::SCALAR) + ba.coeff(Blade::SCALAR)) / 2.0)
    }

    /// Commutator product (ab - ba)/2.
    pub fn commutator(&self, other: &Multivector) -> Multivector {
        let ab = self.geometric_product(other);
        let ba = other.geometric_product(self);
        ab.sub(&ba).scale(0.5)
    }

    pub fn grade_select(&self, grade: u32) -> Multivector {
        Multivector::from_terms(
            self.algebra,
            self.terms().filter(|(b, _)| b.grade() == grade),
        )
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeff(Blade::SCALAR)
    }

    /// Grades present in the multivector, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self.terms.keys().map(|b| b.grade()).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Reversion: each grade-g part picks up (-1)^(g(g-1)/2).
    pub fn reverse(&self) -> Multivector {
        Multivector::from_terms(
            self.algebra,
            self.terms().map(|(b, c)| {
                let g = b.grade();
                let sign = if g % 4 == 2 || g % 4 == 3 { -1.0 } else { 1.0 };
                (b, sign * c)
            }),
        )
    }

    /// Right multiplication by the unit pseudoscalar.
    pub fn right_mul_pseudoscalar(&self) -> Multivector {
        self.geometric_product(&Multivector::pseudoscalar(self.algebra))
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        Multivector::add(self, rhs)
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        Multivector::sub(self, rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector::neg(self)
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}
