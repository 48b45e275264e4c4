//! Poincaré polynomials of IC stalks on affine Grassmannian orbit closures,
//! complex and quaternionic, from Kostka-Foulkes polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::QPolynomial;
use crate::error::{Error, Result};
use crate::kostka::kostka_foulkes_charge;
use crate::weights::{
    dominance_leq, partitions, rho_pairing_difference, two_rho_pairing, Coweight,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Complex,
    Quaternionic,
    /// Orbits of the loop group of `Sp(n)` on the symmetric variety; the
    /// stalks agree with the quaternionic ones.
    Symmetric,
}

impl Flavor {
    /// Cohomological degrees per power of `q`.
    pub fn degree_step(self) -> i64 {
        match self {
            Flavor::Complex => 2,
            Flavor::Quaternionic | Flavor::Symmetric => 4,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Complex => "complex",
            Flavor::Quaternionic => "quaternionic",
            Flavor::Symmetric => "symmetric",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(Flavor::Complex),
            "quaternionic" => Ok(Flavor::Quaternionic),
            "symmetric" => Ok(Flavor::Symmetric),
            other => Err(Error::Precondition(format!("unknown flavor {other:?}"))),
        }
    }
}

/// `q^{<lam - mu, rho>} K_{lam,mu}(q^{-1})`; zero when `mu` is not below `lam`.
pub fn complex_stalk_poly(lam: &Coweight, mu: &Coweight) -> Result<QPolynomial> {
    if !lam.is_dominant() || !mu.is_dominant() {
        return Err(Error::Precondition(
            "stalk polynomials need dominant coweights".into(),
        ));
    }
    if !dominance_leq(mu, lam)? {
        return Ok(QPolynomial::zero());
    }
    let d = rho_pairing_difference(lam, mu)
        .ok_or_else(|| Error::Verification("<lam - mu, rho> is not an integer".into()))?;
    Ok(kostka_foulkes_charge(lam, mu).invert_variable().shift(d))
}

/// Real dimension of the orbit through `lam`.
pub fn orbit_real_dimension(lam: &Coweight, flavor: Flavor) -> i64 {
    let v = two_rho_pairing(lam);
    match flavor {
        Flavor::Complex => 2 * v,
        Flavor::Quaternionic | Flavor::Symmetric => 4 * v,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StalkRow {
    pub lam: Coweight,
    pub mu: Coweight,
    pub poly: QPolynomial,
    /// Cohomological degree to dimension.
    pub degrees: BTreeMap<i64, u64>,
    pub orbit_dimension: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StalkTable {
    pub n: usize,
    pub flavor: Flavor,
    pub rows: Vec<StalkRow>,
}

/// Places the coefficient of `q^i` in degree `step * i - (step / 2) <lam, 2 rho>`.
pub fn place_degrees(
    poly: &QPolynomial,
    lam: &Coweight,
    flavor: Flavor,
) -> Result<BTreeMap<i64, u64>> {
    let step = flavor.degree_step();
    let offset = step / 2 * two_rho_pairing(lam);
    poly.terms()
        .map(|(i, c)| {
            let dim = u64::try_from(c.clone())
                .map_err(|_| Error::Verification(format!("negative stalk dimension {c}")))?;
            Ok((step * i - offset, dim))
        })
        .collect()
}

/// One row of the table; a non-dominant `mu` is replaced by its dominant
/// representative.
pub fn stalk_row(lam: &Coweight, mu: &Coweight, flavor: Flavor) -> Result<StalkRow> {
    let mu = mu.dominant_rep();
    let poly = complex_stalk_poly(lam, &mu)?;
    let degrees = place_degrees(&poly, lam, flavor)?;
    Ok(StalkRow {
        lam: lam.clone(),
        orbit_dimension: orbit_real_dimension(lam, flavor),
        mu,
        poly,
        degrees,
    })
}

/// All rows `(lam, mu)` with `mu <= lam` partitions and `|lam| <= size_bound`.
pub fn stalk_table(n: usize, size_bound: i64, flavor: Flavor) -> Result<StalkTable> {
    let mut pairs = Vec::new();
    for s in 0..=size_bound {
        let parts = partitions(s, n);
        for lam in &parts {
            for mu in &parts {
                if dominance_leq(mu, lam)? {
                    pairs.push((lam.clone(), mu.clone()));
                }
            }
        }
    }
    let rows = pairs
        .par_iter()
        .map(|(lam, mu)| stalk_row(lam, mu, flavor))
        .collect::<Result<Vec<_>>>()?;
    Ok(StalkTable { n, flavor, rows })
}

pub fn complex_stalk_table(n: usize, size_bound: i64) -> Result<StalkTable> {
    stalk_table(n, size_bound, Flavor::Complex)
}

pub fn quaternionic_stalk_table(n: usize, size_bound: i64) -> Result<StalkTable> {
    stalk_table(n, size_bound, Flavor::Quaternionic)
}

impl StalkRow {
    /// Degrees satisfy the parity vanishing: after adding back the shift,
    /// complex degrees are even and quaternionic ones divisible by 4.
    pub fn parity_ok(&self, flavor: Flavor) -> bool {
        let step = flavor.degree_step();
        let offset = step / 2 * two_rho_pairing(&self.lam);
        self.degrees.keys().all(|d| (d + offset) % step == 0)
    }

    /// `deg <= <lam - mu, rho>`, strictly off the diagonal, with constant term 1.
    pub fn degree_bound_ok(&self) -> bool {
        if self.poly.is_zero() {
            return true;
        }
        let Some(d) = rho_pairing_difference(&self.lam, &self.mu) else {
            return false;
        };
        let top = self.poly.degree().unwrap_or(0);
        let bound_ok = if self.lam == self.mu {
            top == 0
        } else {
            top < d
        };
        bound_ok && self.poly.coeff(0) == 1.into()
    }
}

impl StalkTable {
    pub fn parity_ok(&self) -> bool {
        self.rows.iter().all(|r| r.parity_ok(self.flavor))
    }

    pub fn row(&self, lam: &Coweight, mu: &Coweight) -> Option<&StalkRow> {
        self.rows.iter().find(|r| &r.lam == lam && &r.mu == mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn stalk_poly_examples() {
        assert_eq!(
            complex_stalk_poly(&cw(&[2, 0]), &cw(&[2, 0])).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            complex_stalk_poly(&cw(&[2, 0]), &cw(&[1, 1])).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(
            complex_stalk_poly(&cw(&[2, 1, 0]), &cw(&[1, 1, 1])).unwrap(),
            QPolynomial::from_terms([(0, 1), (1, 1)])
        );
        assert!(complex_stalk_poly(&cw(&[1, 1]), &cw(&[2, 0]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_real_dimension(&cw(&[0, 0]), Flavor::Quaternionic), 0);
        assert_eq!(orbit_real_dimension(&cw(&[1, 0]), Flavor::Quaternionic), 4);
        assert_eq!(orbit_real_dimension(&cw(&[1, 0]), Flavor::Complex), 2);
        assert_eq!(
            orbit_real_dimension(&cw(&[1, 0, 0]), Flavor::Quaternionic),
            8
        );
    }

    #[test]
    fn quaternionic_placement() {
        let row = stalk_row(&cw(&[2, 0]), &cw(&[1, 1]), Flavor::Quaternionic).unwrap();
        assert_eq!(row.degrees, BTreeMap::from([(-4, 1)]));
        let row = stalk_row(&cw(&[2, 0]), &cw(&[1, 1]), Flavor::Complex).unwrap();
        assert_eq!(row.degrees, BTreeMap::from([(-2, 1)]));
        let row = stalk_row(&cw(&[1, 0]), &cw(&[1, 0]), Flavor::Quaternionic).unwrap();
        assert_eq!(row.degrees, BTreeMap::from([(-2, 1)]));
        assert!(row.parity_ok(Flavor::Quaternionic));
    }

    #[test]
    fn non_dominant_mu_is_reduced() {
        let row = stalk_row(&cw(&[2, 0]), &cw(&[0, 2]), Flavor::Complex).unwrap();
        assert_eq!(row.mu, cw(&[2, 0]));
        assert_eq!(row.poly, QPolynomial::one());
    }

    #[test]
    fn flavor_round_trip() {
        for f in [Flavor::Complex, Flavor::Quaternionic, Flavor::Symmetric] {
            assert_eq!(f.to_string().parse::<Flavor>().unwrap(), f);
        }
        assert!("real".parse::<Flavor>().is_err());
    }
}
