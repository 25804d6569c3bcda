//! Standard isometries used by the family models.

use super::RhoLattice;
use crate::error::{Error, Result};
use crate::exactla::{IntMatrix, RatMatrix};
use crate::lattice::standard::{a, d4_in_z4_basis, d4_z4_model, u, u_n, Ade};
use crate::lattice::Lattice;

fn known(l: Lattice, rows: &[[i64; 4]]) -> RhoLattice {
    RhoLattice::new(l, IntMatrix::from_rows(rows)).expect("hand-checked isometry")
}

/// Order 3 on `U ⊕ U` with basis `(e₁, f₁, e₂, f₂)`:
/// `e₁ ↦ e₂ ↦ −e₁ − e₂`, `f₁ ↦ −f₁ + f₂`, `f₂ ↦ −f₁`.
pub fn rho_uu() -> RhoLattice {
    known(
        u().direct_sum(&u()),
        &[[0, 0, 1, 0], [0, -1, 0, 1], [-1, 0, -1, 0], [0, -1, 0, 0]],
    )
}

/// Order 3 on `U ⊕ U(3)` with basis `(e₁, f₁, e₂′, f₂′)`:
/// `e₁ ↦ e₁ − e₂′`, `e₂′ ↦ 3e₁ − 2e₂′`, `f₁ ↦ −2f₁ − f₂′`, `f₂′ ↦ 3f₁ + f₂′`.
pub fn rho_uu3() -> RhoLattice {
    known(
        u().direct_sum(&u_n(3)),
        &[[1, 0, -1, 0], [0, -2, 0, -1], [3, 0, -2, 0], [0, 3, 0, 1]],
    )
}

/// Order 4 on `U ⊕ U(2)` with basis `(e, f, e′, f′)`; `ρ² = −1` and `⟨e, e′⟩` is invariant.
pub fn rho_uu2_order4() -> RhoLattice {
    known(
        u().direct_sum(&u_n(2)),
        &[[-1, 0, 1, 0], [0, 1, 0, 1], [-2, 0, 1, 0], [0, -2, 0, -1]],
    )
}

/// Order 4 on `D₄`: the action `e₁ ↦ e₂ ↦ −e₁`, `e₃ ↦ e₄ ↦ −e₃` on `ℤ⁴`
/// restricted to the even-sum sublattice, written in the simple-root basis.
pub fn rho_d4_order4() -> RhoLattice {
    let amb = IntMatrix::from_rows(&[[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]);
    let b = d4_in_z4_basis();
    let binv = RatMatrix::from_int(&b).inverse().expect("basis is invertible");
    let m = RatMatrix::from_int(&b.mul(&amb))
        .mul(&binv)
        .to_int()
        .expect("ℤ⁴ action preserves the even-sum sublattice");
    RhoLattice::new(d4_z4_model(), m).expect("restriction of an isometry")
}

/// Order 4 on `A₁ ⊕ A₁`: `h₁ ↦ h₂ ↦ −h₁`.
pub fn rho_a1sq_order4() -> RhoLattice {
    let l = a(1).direct_sum(&a(1));
    RhoLattice::new(l, IntMatrix::from_rows(&[[0, 1], [-1, 0]])).expect("swap with sign")
}

/// Coxeter element `s₁ s₂ ⋯ sₙ` in root coordinates, with
/// `sᵢ(eⱼ) = eⱼ − ⟨eⱼ, αᵢ⟩ eᵢ`.
pub fn coxeter_element(ade: Ade) -> IntMatrix {
    let g = ade.cartan();
    let n = ade.rank();
    let mut c = IntMatrix::identity(n);
    for i in 0..n {
        let mut s = IntMatrix::identity(n);
        for j in 0..n {
            s[(j, i)] -= &g[(j, i)];
        }
        c = c.mul(&s);
    }
    c
}

/// Order-3 isometry without fixed vectors and with trivial discriminant action,
/// built as the `h/3`-th power of a Coxeter element. `ade` is returned
/// positive definite; negate for the opposite sign convention.
pub fn fpf_order3(ade: Ade) -> Result<RhoLattice> {
    let ade = ade.validate()?;
    let h = ade.coxeter_number();
    if h % 3 != 0 {
        return Err(Error::Unsupported(format!("{ade} has Coxeter number prime to 3")));
    }
    let c = coxeter_element(ade);
    let base = c.pow((h / 3) as u32);
    for m in [base.clone(), base.pow(2)] {
        let r = RhoLattice::new(ade.lattice(), m)?;
        if r.order == 3 && r.is_fixed_point_free() && r.is_estar()? {
            return Ok(r);
        }
    }
    Err(Error::Unsupported(format!(
        "no fixed-point-free order-3 Coxeter power with trivial discriminant action on {ade}"
    )))
}

/// Whether the first candidate (before squaring) already acts trivially on
/// the discriminant group.
pub fn coxeter_power_is_estar(ade: Ade) -> Result<bool> {
    let h = ade.coxeter_number();
    let m = coxeter_element(ade).pow((h / 3) as u32);
    RhoLattice::new(ade.lattice(), m)?.is_estar()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_orders() {
        for ade in [Ade::A(2), Ade::D(4), Ade::E(6)] {
            let r = RhoLattice::new(ade.lattice(), coxeter_element(ade)).unwrap();
            assert_eq!(r.order as usize, ade.coxeter_number(), "{ade}");
        }
        // h(E8) = 30 exceeds the order bound of `check`; test the order directly.
        let c = coxeter_element(Ade::E(8));
        let id = IntMatrix::identity(8);
        assert_eq!(c.pow(30), id);
        for k in [6, 10, 15] {
            assert_ne!(c.pow(k), id);
        }
    }

    #[test]
    fn fpf_examples() {
        for ade in [Ade::A(2), Ade::E(6), Ade::E(8)] {
            let r = fpf_order3(ade).unwrap();
            assert_eq!(r.order, 3);
            assert!(r.is_fixed_point_free());
            assert!(r.is_estar().unwrap());
        }
        // The first E6 candidate already acts trivially on A_{E6}.
        assert!(coxeter_power_is_estar(Ade::E(6)).unwrap());
    }

    #[test]
    fn a2_rotation() {
        let r = fpf_order3(Ade::A(2)).unwrap();
        let m = &r.rho;
        // α₁ ↦ α₂ ↦ −α₁ − α₂ or its inverse.
        let fwd = IntMatrix::from_rows(&[[0, 1], [-1, -1]]);
        let back = IntMatrix::from_rows(&[[-1, -1], [1, 0]]);
        assert!(*m == fwd || *m == back, "{m}");
    }

    #[test]
    fn d4_has_no_order3_candidate() {
        assert!(fpf_order3(Ade::D(4)).is_err());
    }

    #[test]
    fn order4_blocks_square_to_minus_one() {
        for r in [rho_uu2_order4(), rho_d4_order4(), rho_a1sq_order4()] {
            assert_eq!(r.order, 4);
            let n = r.rank();
            assert_eq!(r.rho.pow(2), IntMatrix::identity(n).neg());
        }
    }
}
