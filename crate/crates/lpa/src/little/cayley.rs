//! Multiplication table of the subalgebra the adapted frame generates, and
//! its identification with an abstract degenerate signature.
//!
//! The frame [e0, e1, .., e_{n-1}] has e0 e0 = 0, e_i e_i = sigma, all
//! pairs orthogonal. Its 2^n ordered products therefore multiply exactly
//! like the basis blades of G(0,n-1,1) when sigma = -1, or G(n-1,0,1) when
//! sigma = +1, with the nilpotent generator mapped last. `CayleyTable`
//! measures the actual structure coefficients inside the parent algebra;
//! `verify_isomorphism` compares every entry against the reference table.

use std::fmt;

use crate::algebra::{Algebra, Blade, Multivector, Signature};
use crate::report::Report;

use super::{LittleAlgebra, LittleError};

/// Structure coefficients of the embedded subalgebra: for frame blade
/// masks s and t, `entry(s, t)` is (c, u) with E_s E_t = c E_u.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    dim: usize,
    entries: Vec<Vec<(f64, u16)>>,
}

impl CayleyTable {
    /// Multiplies every pair of embedded blades and extracts the single
    /// coefficient each product must reduce to. Coefficients are read off
    /// with the reciprocal frame (f0 = the parent time axis up to sign,
    /// f_i = sigma e_i), which is biorthogonal to the frame even though e0
    /// is null. A product that fails to land on the expected blade within
    /// `tol` is a closure violation and fails the build.
    pub fn build(la: &LittleAlgebra, tol: f64) -> Result<CayleyTable, LittleError> {
        let n = la.dim();
        let count = 1u16 << n;
        let parent = la.parent();
        let sigma = la.spatial_square();

        let blades: Vec<Multivector> = (0..count).map(|m| la.embedded_blade(m)).collect();

        let mut reciprocal =
            vec![Multivector::basis_vector(parent, la.time_index()).scale(-sigma)];
        reciprocal.extend(la.frame()[1..].iter().map(|e| e.scale(sigma)));
        let duals: Vec<Multivector> = (0..count)
            .map(|m| super::ordered_product(parent, &reciprocal, m))
            .collect();
        let extract = |p: &Multivector, u: u16| -> f64 {
            p.geometric_product(&duals[u as usize].reverse()).scalar_part()
        };

        let mut entries = Vec::with_capacity(count as usize);
        for s in 0..count {
            let mut row = Vec::with_capacity(count as usize);
            for t in 0..count {
                let p = blades[s as usize].geometric_product(&blades[t as usize]);
                let u = s ^ t;
                let c = extract(&p, u);
                let residual = p.sub(&blades[u as usize].scale(c)).max_abs();
                if residual > tol {
                    // fall back to the full span to report how far outside
                    // the subalgebra the product actually fell
                    let mut rest = p.clone();
                    for u2 in 0..count {
                        let c2 = extract(&rest, u2);
                        rest = rest.sub(&blades[u2 as usize].scale(c2));
                    }
                    return Err(LittleError::NotClosed {
                        s,
                        t,
                        residual: residual.max(rest.max_abs()),
                    });
                }
                row.push((c, u));
            }
            entries.push(row);
        }
        Ok(CayleyTable { dim: n, entries })
    }

    /// Number of frame generators; the table is 2^dim by 2^dim.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, s: u16, t: u16) -> (f64, u16) {
        self.entries[s as usize][t as usize]
    }

    /// Frame-blade label: "1" for the scalar, otherwise "w" plus the frame
    /// indices, w0 being the nilpotent direction.
    pub fn label(mask: u16) -> String {
        if mask == 0 {
            return "1".to_string();
        }
        let mut out = String::from("w");
        for i in 0..16 {
            if mask & (1 << i) != 0 {
                out.push(char::from_digit(i, 16).expect("index below 16"));
            }
        }
        out
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let count = 1u16 << self.dim;
        let width = self.dim + 3;
        write!(f, "{:>width$}", "*")?;
        for t in 0..count {
            write!(f, "{:>width$}", CayleyTable::label(t))?;
        }
        writeln!(f)?;
        for s in 0..count {
            write!(f, "{:>width$}", CayleyTable::label(s))?;
            for t in 0..count {
                let (c, u) = self.entry(s, t);
                let rounded = c.round();
                let cell = if c == 0.0 {
                    "0".to_string()
                } else if (c - rounded).abs() < 1e-9 && rounded.abs() == 1.0 {
                    let sign = if rounded > 0.0 { "" } else { "-" };
                    format!("{sign}{}", CayleyTable::label(u))
                } else {
                    format!("{c:.2}*{}", CayleyTable::label(u))
                };
                write!(f, "{cell:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The abstract signature the subalgebra must realize.
pub fn reference_signature(la: &LittleAlgebra) -> Signature {
    let n = la.dim() as u32;
    if la.spatial_square() < 0.0 {
        Signature::new(0, n - 1, 1)
    } else {
        Signature::new(n - 1, 0, 1)
    }
}

/// Compares the embedded multiplication table against the blade table of
/// the reference signature, generator by generator: frame vector e_i maps
/// to reference generator i-1, the nilpotent e0 to the last one.
pub fn verify_isomorphism(la: &LittleAlgebra, tol: f64) -> Result<Report, LittleError> {
    let table = CayleyTable::build(la, tol)?;
    let n = la.dim();
    let count = 1u16 << n;
    let sig = reference_signature(la);
    let reference = Algebra::new(sig)?;
    let spatial_bits = (1u16 << (n - 1)) - 1;
    let map = |m: u16| -> u16 {
        let nil = if m & 1 != 0 { 1 << (n - 1) } else { 0 };
        nil | ((m >> 1) & spatial_bits)
    };

    let mut worst = 0.0f64;
    let mut mask_mismatches = 0u32;
    for s in 0..count {
        for t in 0..count {
            let (c, u) = table.entry(s, t);
            let (rc, ru) = reference.blade_product(
                Blade::from_mask(map(s)),
                Blade::from_mask(map(t)),
            );
            worst = worst.max((c - rc).abs());
            if rc != 0.0 && map(u) != ru.mask() {
                mask_mismatches += 1;
            }
        }
    }

    let mut report = Report::new("cayley-isomorphism");
    report.check(
        "structure-coefficients",
        format!("embedded frame products match the blade table of {sig}"),
        worst,
        tol,
    );
    report.check_exact(
        "blade-correspondence",
        format!("product blades map to {sig} blades index for index"),
        mask_mismatches as f64,
    );
    Ok(report)
}
