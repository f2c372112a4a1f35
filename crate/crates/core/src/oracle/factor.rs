//! Berlekamp factorization for squarefree polynomials.

use crate::error::{Error, Result};
use crate::gf::{Matrix, Polynomial};

/// Factors a squarefree polynomial into monic irreducible factors.
///
/// The input must be squarefree (no repeated factors); the output is
/// sorted by degree and then lexicographically by coefficient vector, so
/// the factorization is canonical. The algorithm is Berlekamp's: the
/// fixed space of the Frobenius map on GF(q)[y]/(f) has one dimension per
/// irreducible factor, and gcds against shifted basis elements separate
/// the factors. Everything is deterministic.
pub fn berlekamp_squarefree(f: &Polynomial) -> Result<Vec<Polynomial>> {
    let field = f.field().clone();
    let d = match f.degree() {
        None => return Err(Error::DivisionByZero),
        Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let f = f.monic()?;
    if d == 1 {
        return Ok(vec![f]);
    }
    debug_assert!(
        f.gcd(&f.derivative())?.degree() == Some(0),
        "input must be squarefree"
    );
    let q = field.order();

    // Petit matrix: row i holds the coefficients of y^{q*i} mod f, so a row
    // vector h satisfies h * Q = h exactly when h(y)^q = h(y) mod f.
    let y = Polynomial::monomial(&field, 1, 1)?;
    let yq = y.pow_mod(q as u128, &f)?;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(d);
    let mut cur = Polynomial::one(&field);
    for i in 0..d {
        if i > 0 {
            cur = cur.mul(&yq)?.rem(&f)?;
        }
        let mut row = vec![0u64; d];
        row[..cur.coeffs().len()].copy_from_slice(cur.coeffs());
        rows.push(row);
    }
    let mut frob = Matrix::from_rows(&field, &rows)?;
    for i in 0..d {
        let v = field.sub_v(frob.get(i, i), 1);
        frob.set(i, i, v);
    }
    let basis = frob.left_nullspace();
    let r = basis.rows();
    let mut factors = vec![f];
    if r == 1 {
        return Ok(factors);
    }

    for bi in 0..r {
        let h = Polynomial::new(&field, basis.row(bi))?;
        if h.degree().is_none_or(|dg| dg == 0) {
            continue; // constants never separate anything
        }
        let mut refined = Vec::with_capacity(factors.len());
        for u in factors {
            if u.degree() == Some(1) {
                refined.push(u);
                continue;
            }
            // h^q - h = prod_c (h - c) vanishes mod u, so the gcds below
            // partition u completely; `rest` ends up constant.
            let mut rest = u;
            for c in 0..q {
                if rest.degree() == Some(0) {
                    break;
                }
                let shifted = h.sub(&Polynomial::new(&field, &[c])?)?;
                let g = rest.gcd(&shifted)?;
                if g.degree().is_some_and(|dg| dg >= 1) {
                    rest = rest.divrem(&g)?.0;
                    refined.push(g);
                }
            }
            assert!(rest.degree() == Some(0), "splitting gcds must exhaust the factor");
        }
        factors = refined;
        if factors.len() == r {
            break;
        }
    }
    assert_eq!(factors.len(), r, "Frobenius fixed-space dimension must match the factor count");
    let mut factors = factors
        .into_iter()
        .map(|p| p.monic())
        .collect::<Result<Vec<_>>>()?;
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn poly(field: &Field, coeffs: &[u64]) -> Polynomial {
        Polynomial::new(field, coeffs).unwrap()
    }

    #[test]
    fn binary_cyclotomic_fifteen() {
        let f2 = Field::new(2).unwrap();
        let f = Polynomial::xn_minus_one(&f2, 15);
        let factors = berlekamp_squarefree(&f).unwrap();
        let degrees: Vec<usize> = factors.iter().map(|p| p.degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 4, 4, 4]);
        let expect: Vec<Vec<u64>> = vec![
            vec![1, 1],
            vec![1, 1, 1],
            vec![1, 0, 0, 1, 1],
            vec![1, 1, 0, 0, 1],
            vec![1, 1, 1, 1, 1],
        ];
        let got: Vec<Vec<u64>> = factors.iter().map(|p| p.coeffs().to_vec()).collect();
        assert_eq!(got, expect);
        let product = factors
            .iter()
            .fold(Polynomial::one(&f2), |acc, p| acc.mul(p).unwrap());
        assert_eq!(product, f);
    }

    #[test]
    fn ternary_quadratic_pair() {
        let f3 = Field::new(3).unwrap();
        // (y^2 + 1)(y^2 + y + 2), both irreducible over GF(3).
        let f = poly(&f3, &[1, 0, 1]).mul(&poly(&f3, &[2, 1, 1])).unwrap();
        let factors = berlekamp_squarefree(&f).unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].coeffs(), &[1, 0, 1]);
        assert_eq!(factors[1].coeffs(), &[2, 1, 1]);
    }

    #[test]
    fn irreducible_passes_through() {
        let f2 = Field::new(2).unwrap();
        let f = poly(&f2, &[1, 1, 0, 0, 1]);
        let factors = berlekamp_squarefree(&f).unwrap();
        assert_eq!(factors, vec![f]);
    }

    #[test]
    fn quaternary_length_five() {
        let f4 = Field::new(4).unwrap();
        let f = Polynomial::xn_minus_one(&f4, 5);
        let factors = berlekamp_squarefree(&f).unwrap();
        let degrees: Vec<usize> = factors.iter().map(|p| p.degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 2]);
        let product = factors
            .iter()
            .fold(Polynomial::one(&f4), |acc, p| acc.mul(p).unwrap());
        assert_eq!(product, f);
        for p in &factors {
            assert_eq!(berlekamp_squarefree(p).unwrap().len(), 1);
        }
    }

    #[test]
    fn scalar_and_linear_inputs() {
        let f5 = Field::new(5).unwrap();
        assert!(berlekamp_squarefree(&Polynomial::zero(&f5)).is_err());
        assert!(berlekamp_squarefree(&poly(&f5, &[3])).unwrap().is_empty());
        let lin = poly(&f5, &[2, 3]);
        let factors = berlekamp_squarefree(&lin).unwrap();
        // Monic normalization: 3y + 2 = 3(y + 4).
        assert_eq!(factors, vec![poly(&f5, &[4, 1])]);
    }
}
