use super::{Blade, Error, Multivector};

/// An even multivector R with R R~ = 1, applied to other elements through the
/// sandwich R x R~. The invariant is enforced at construction, so sandwiching
/// never needs a runtime gate.
#[derive(Clone, PartialEq, Debug)]
pub struct Rotor {
    value: Multivector,
}

// Norm residual allowed at construction. Relative in the rotor's own scale:
// exp of a large boost cancels cosh^2 - sinh^2 only to ulp(cosh^2), which is
// far above any absolute epsilon while still being a perfectly good rotor.
const NORM_TOL: f64 = 1e-12;

impl Rotor {
    pub fn identity(algebra: super::Algebra) -> Rotor {
        Rotor {
            value: Multivector::scalar(algebra, 1.0),
        }
    }

    /// Wraps an even multivector after checking R R~ = 1 to tolerance
    /// 1e-12 scaled by the squared coefficient magnitude.
    pub fn try_new(value: Multivector) -> Result<Rotor, Error> {
        if !value.is_even() {
            return Err(Error::NotEven);
        }
        let residual = Rotor::norm_residual_of(&value);
        let scale = 1.0 + value.max_abs() * value.max_abs();
        if residual > NORM_TOL * scale {
            return Err(Error::RotorNorm { residual });
        }
        Ok(Rotor { value })
    }

    fn norm_residual_of(value: &Multivector) -> f64 {
        let prod = value.geometric_product(&value.reverse());
        prod.sub(&Multivector::scalar(value.algebra(), 1.0)).max_abs()
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn reverse(&self) -> Multivector {
        self.value.reverse()
    }

    /// Deviation of R R~ from exactly 1; zero for rotors built from exact
    /// integer data.
    pub fn norm_residual(&self) -> f64 {
        Rotor::norm_residual_of(&self.value)
    }

    /// Sandwich conjugation R x R~.
    pub fn sandwich(&self, x: &Multivector) -> Multivector {
        self.value
            .geometric_product(x)
            .geometric_product(&self.value.reverse())
    }
}

// X^2 counts as scalar when everything else is below this, relative to the
// coefficient scale; the branch choice only matters near the boundary where
// all branches agree numerically anyway.
const CLASSIFY_TOL: f64 = 1e-12;
const SERIES_EPS: f64 = 1e-14;
const SERIES_MAX_TERMS: usize = 64;

/// Exponential of the bivector X = scale * b.
///
/// When X^2 is a scalar the closed forms apply and are exact in structure:
///   X^2 = -l^2  ->  cos l + X sin(l)/l
///   X^2 = +l^2  ->  cosh l + X sinh(l)/l
///   X^2 =  0    ->  1 + X           (no truncation error at all)
/// Otherwise falls back to the power series, converging to 1e-14 within 64
/// terms or reporting divergence.
pub fn exp_bivector(b: &Multivector, scale: f64) -> Result<Rotor, Error> {
    if !b.is_homogeneous(2) {
        return Err(Error::WrongGrade { expected: 2 });
    }
    let x = b.scale(scale);
    let alg = x.algebra();
    let x2 = x.geometric_product(&x);
    let s = x2.coeff(Blade::SCALAR);
    let non_scalar = x2.sub(&Multivector::scalar(alg, s)).max_abs();
    let coeff_scale = 1.0 + x.max_abs() * x.max_abs();

    if non_scalar > CLASSIFY_TOL * coeff_scale {
        return exp_series(&x);
    }
    let one = Multivector::scalar(alg, 1.0);
    if s.abs() <= CLASSIFY_TOL * coeff_scale {
        // nilpotent: the series terminates after the linear term
        return Rotor::try_new(one.add(&x));
    }
    let value = if s < 0.0 {
        let l = (-s).sqrt();
        one.scale(l.cos()).add(&x.scale(sinc(l)))
    } else {
        let l = s.sqrt();
        one.scale(l.cosh()).add(&x.scale(sinhc(l)))
    };
    Rotor::try_new(value)
}

fn sinc(l: f64) -> f64 {
    if l < 1e-8 {
        1.0 - l * l / 6.0
    } else {
        l.sin() / l
    }
}

fn sinhc(l: f64) -> f64 {
    if l < 1e-8 {
        1.0 + l * l / 6.0
    } else {
        l.sinh() / l
    }
}

fn exp_series(x: &Multivector) -> Result<Rotor, Error> {
    let alg = x.algebra();
    let mut sum = Multivector::scalar(alg, 1.0);
    let mut term = Multivector::scalar(alg, 1.0);
    for k in 1..=SERIES_MAX_TERMS {
        term = term.geometric_product(x).scale(1.0 / k as f64);
        sum = sum.add(&term);
        if term.max_abs() <= SERIES_EPS {
            return Rotor::try_new(sum);
        }
    }
    Err(Error::SeriesDiverged)
}
