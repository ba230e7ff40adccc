//! Degree polynomials of vertices in joins, products and complements,
//! computed from factor data alone.

use crate::poly::{Coeff, Poly};

use super::DpError;

fn as_coeff<C: Coeff>(v: u64) -> C {
    C::from_u64(v).expect("value fits the coefficient type")
}

fn expect_sc<C: Coeff>(p: &Poly<C>, want: u64, what: &str) -> Result<(), DpError> {
    if p.sc() == as_coeff(want) {
        Ok(())
    } else {
        Err(DpError::InconsistentInputs(format!("sc({what}) = {} but expected {want}", p.sc())))
    }
}

/// `dp_{G∨H}(u) = x^{n2}·dp_G(u) + x^{n1}·dp(H)` for `u` in `G`, where `n1`
/// and `n2` are the orders of `G` and `H`. Swap the roles for vertices of
/// `H`.
pub fn formula_join<C: Coeff>(dp_g_u: &Poly<C>, dp_h: &Poly<C>, n1: u64, n2: u64) -> Result<Poly<C>, DpError> {
    if n1 == 0 || n2 == 0 {
        return Err(DpError::InconsistentInputs("join factors must be nonempty".into()));
    }
    expect_sc(dp_h, n2, "dp(H)")?;
    Ok(&dp_g_u.shift(n2) + &dp_h.shift(n1))
}

/// `dp_{G×H}((u,v)) = x^{deg u}·dp(v) + x^{deg v}·dp(u)`.
pub fn formula_cartesian<C: Coeff>(
    dp_u: &Poly<C>,
    dp_v: &Poly<C>,
    deg_u: u64,
    deg_v: u64,
) -> Result<Poly<C>, DpError> {
    expect_sc(dp_u, deg_u, "dp(u)")?;
    expect_sc(dp_v, deg_v, "dp(v)")?;
    Ok(&dp_v.shift(deg_u) + &dp_u.shift(deg_v))
}

/// `dp_{G⊗H}((u,v)) = dp(u) ⊗ dp(v)`.
pub fn formula_tensor<C: Coeff>(dp_u: &Poly<C>, dp_v: &Poly<C>) -> Poly<C> {
    dp_u.tensor(dp_v)
}

/// `dp_{G[H]}((u,v)) = dp(u)^{×n2}·dp(H) + x^{deg(u)·n2}·dp(v)`, where
/// `^{×n2}` multiplies every exponent by `n2`.
pub fn formula_lexicographic<C: Coeff>(
    dp_u: &Poly<C>,
    dp_v: &Poly<C>,
    dp_h: &Poly<C>,
    deg_u: u64,
    n2: u64,
) -> Result<Poly<C>, DpError> {
    if n2 == 0 {
        return Err(DpError::InconsistentInputs("H must be nonempty".into()));
    }
    expect_sc(dp_u, deg_u, "dp(u)")?;
    expect_sc(dp_h, n2, "dp(H)")?;
    let spread = dp_u.scale_exponents(n2)?;
    Ok(&(&spread * dp_h) + &dp_v.shift(deg_u * n2))
}

/// `dp_{G^c}(u)`: reflect `dp(G) − dp_G(u) − x^{deg u}` at `n − 1`.
pub fn formula_complement<C: Coeff>(
    dp_g: &Poly<C>,
    dp_u: &Poly<C>,
    deg_u: u64,
    n: u64,
) -> Result<Poly<C>, DpError> {
    if n == 0 {
        return Err(DpError::InconsistentInputs("graph must be nonempty".into()));
    }
    let rest = dp_g.checked_sub(dp_u)?.checked_sub(&Poly::x_pow(deg_u))?;
    Ok(rest.reflect_exponents(n - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyError;
    use crate::DegreePoly;

    fn p(s: &str) -> DegreePoly {
        s.parse().unwrap()
    }

    #[test]
    fn join_examples() {
        assert_eq!(formula_join(&p("0"), &p("1"), 1, 1).unwrap(), p("x"));
        assert_eq!(formula_join(&p("0"), &p("4x^2"), 1, 4).unwrap(), p("4x^3"));
        // a C4 vertex joined with K1: G = C4 (n1 = 4), H = K1 (n2 = 1)
        assert_eq!(formula_join(&p("2x^2"), &p("1"), 4, 1).unwrap(), p("2x^3+x^4"));
        assert!(matches!(
            formula_join(&p("2x^2"), &p("1"), 1, 4),
            Err(DpError::InconsistentInputs(_))
        ));
    }

    #[test]
    fn cartesian_examples() {
        assert_eq!(formula_cartesian(&p("x"), &p("x"), 1, 1).unwrap(), p("2x^2"));
        assert_eq!(formula_cartesian(&p("2x"), &p("x"), 2, 1).unwrap(), p("x^3+2x^2"));
        assert!(formula_cartesian(&p("0"), &p("0"), 0, 0).unwrap().is_zero());
        assert!(matches!(formula_cartesian(&p("2x"), &p("x"), 1, 1), Err(DpError::InconsistentInputs(_))));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(formula_tensor(&p("x"), &p("x")), p("x"));
        assert_eq!(formula_tensor(&p("2x"), &p("x")), p("2x"));
        assert!(formula_tensor(&p("0"), &p("3x^2+x")).is_zero());
    }

    #[test]
    fn lexicographic_examples() {
        assert_eq!(formula_lexicographic(&p("x"), &p("x"), &p("2x"), 1, 2).unwrap(), p("3x^3"));
        assert_eq!(formula_lexicographic(&p("x"), &p("0"), &p("2"), 1, 2).unwrap(), p("2x^2"));
        assert!(formula_lexicographic(&p("0"), &p("0"), &p("3"), 0, 3).unwrap().is_zero());
        assert!(matches!(
            formula_lexicographic(&p("x"), &p("x"), &p("x"), 1, 2),
            Err(DpError::InconsistentInputs(_))
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(formula_complement(&p("x+2x^2+x^3"), &p("x^3"), 1, 4).unwrap(), p("2x"));
        assert_eq!(formula_complement(&p("5x^2"), &p("2x^2"), 2, 5).unwrap(), p("2x^2"));
        assert!(formula_complement(&p("4x^3"), &p("3x^3"), 3, 4).unwrap().is_zero());
        assert_eq!(
            formula_complement(&p("x^2"), &p("2x^2"), 2, 3),
            Err(DpError::Poly(PolyError::NegativeCoefficient { exponent: 2 }))
        );
        assert_eq!(
            formula_complement(&p("x^5+x"), &p("x"), 0, 4).unwrap_err(),
            DpError::Poly(PolyError::NegativeCoefficient { exponent: 0 })
        );
        assert_eq!(
            formula_complement(&p("x^5+1"), &p("0"), 0, 4).unwrap_err(),
            DpError::Poly(PolyError::DegreeExceedsBound { degree: 5, bound: 3 })
        );
    }
}
