use std::fmt;

use num_bigint::BigInt;

use crate::eisenstein::{fpf_order3, RhoLattice};
use crate::error::{Error, Result};
use crate::exactla::{IntMatrix, RatMatrix};
use crate::lattice::standard::{diag, Ade};
use crate::lattice::{Lattice, Sublattice};
use crate::roots::{root_system, RootSystemType};

/// Marked triple cover data: `m` pinch points and the `(genus, degree)`
/// pairs of the cover's connected components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentSpec {
    pub m: u8,
    pub parts: Vec<(u8, u8)>,
}

impl ComponentSpec {
    pub fn new(m: u8, parts: &[(u8, u8)]) -> Self {
        let mut parts = parts.to_vec();
        parts.sort();
        ComponentSpec { m, parts }
    }

    /// The six admissible rows, in table order.
    pub fn rows() -> [ComponentSpec; 6] {
        [
            ComponentSpec::new(0, &[(1, 3)]),
            ComponentSpec::new(0, &[(0, 1), (2, 2)]),
            ComponentSpec::new(1, &[(0, 3)]),
            ComponentSpec::new(1, &[(0, 1), (1, 2)]),
            ComponentSpec::new(2, &[(0, 1), (0, 2)]),
            ComponentSpec::new(3, &[(0, 1), (0, 1), (0, 1)]),
        ]
    }

    /// Position among [`ComponentSpec::rows`], 1-based.
    pub fn row(&self) -> Option<usize> {
        Self::rows().iter().position(|r| r == self).map(|i| i + 1)
    }

    /// Terminal surface and blow-up steps of the case analysis.
    fn plan(&self) -> Result<(Terminal, Vec<Orbit>)> {
        use Orbit::{Cycle, Fixed};
        let plan = match self.row() {
            Some(1) => (Terminal::DelPezzo(Ade::E(6)), vec![Cycle]),
            Some(2) => (Terminal::DelPezzo(Ade::E(8)), vec![Fixed]),
            Some(3) => (Terminal::Plane, vec![Cycle; 3]),
            Some(4) => (Terminal::DelPezzo(Ade::E(6)), vec![Fixed; 3]),
            Some(5) => (Terminal::Plane, vec![Cycle, Cycle, Fixed, Fixed, Fixed]),
            Some(6) => (Terminal::Plane, [vec![Cycle], vec![Fixed; 6]].concat()),
            _ => return Err(Error::Unsupported(format!("no component row {self}"))),
        };
        Ok(plan)
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, {{", self.m)?;
        for (i, (g, d)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({g},{d})")?;
        }
        f.write_str("})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Terminal {
    Plane,
    /// Del Pezzo surface whose `K⊥` is the given root lattice.
    DelPezzo(Ade),
}

/// One blow-up step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orbit {
    /// Three exceptional classes permuted cyclically.
    Cycle,
    /// One exceptional class fixed by `ρ`.
    Fixed,
}

/// Picard lattice `I₁,₉` of one component, with `ρ` and the double-curve class.
#[derive(Clone, Debug)]
pub struct ComponentModel {
    pub spec: ComponentSpec,
    pub rho: RhoLattice,
    /// Class of the double curve, `3h − Σ eᵢ`.
    pub d: Vec<BigInt>,
    /// `K⊥` of the terminal del Pezzo surface; rank 0 for `P²`.
    pub kperp_core: Sublattice,
    pub exceptional_orbits: Vec<Orbit>,
}

impl ComponentModel {
    pub fn picard(&self) -> &Lattice {
        &self.rho.lattice
    }
}

/// Simple roots of `K⊥ ⊂ I₁,ₙ` in Bourbaki order, `n ∈ {6, 8}`.
fn del_pezzo_roots(n: usize) -> IntMatrix {
    let mut rows = Vec::new();
    let unit = |i: usize, c: i64, v: &mut Vec<i64>| v[i] += c;
    let mut push = |terms: &[(usize, i64)]| {
        let mut v = vec![0i64; n + 1];
        for &(i, c) in terms {
            unit(i, c, &mut v);
        }
        rows.push(v);
    };
    push(&[(1, 1), (2, -1)]);
    push(&[(0, 1), (1, -1), (2, -1), (3, -1)]);
    for i in 2..n {
        push(&[(i, 1), (i + 1, -1)]);
    }
    IntMatrix::from_rows(&rows)
}

/// `I₁,ₙ` with an order-3 action on `K⊥` extended by fixing `K`.
fn del_pezzo(ade: Ade) -> Result<(RhoLattice, Sublattice)> {
    let n = ade.rank();
    let l = diag(&[[1i64].as_slice(), &vec![-1; n]].concat());
    let roots = del_pezzo_roots(n);
    let core = l.sublattice(roots.clone())?;
    if core.gram() != ade.cartan().neg() {
        return Err(Error::Internal(format!("K⊥ basis of I1,{n} does not have Gram −{ade}")));
    }
    let mut k = vec![BigInt::from(-3)];
    k.extend(std::iter::repeat(BigInt::from(1)).take(n));
    let full = roots.vstack(&IntMatrix::from_big_rows(vec![k], n + 1));
    let full_inv = RatMatrix::from_int(&full)
        .inverse()
        .ok_or_else(|| Error::Internal("roots and K are dependent".into()))?;
    let base = fpf_order3(ade)?.rho;
    for m in [base.clone(), base.mul(&base)] {
        let block = RatMatrix::from_int(&m.block_diag(&IntMatrix::identity(1)));
        let ext = full_inv.mul(&block).mul(&RatMatrix::from_int(&full));
        if let Some(ext) = ext.to_int() {
            return Ok((RhoLattice::new(l, ext)?, core));
        }
    }
    Err(Error::Unsupported(format!(
        "order-3 action on {ade} does not extend integrally to I1,{n}"
    )))
}

/// Picard lattice, `ρ` and double curve for one row of the component table.
pub fn build_component(spec: &ComponentSpec) -> Result<ComponentModel> {
    let (terminal, steps) = spec.plan()?;
    let (mut rho, mut gram) = match terminal {
        Terminal::Plane => (IntMatrix::identity(1), diag(&[1])),
        Terminal::DelPezzo(ade) => {
            let (r, _) = del_pezzo(ade)?;
            (r.rho, r.lattice)
        }
    };
    let cycle = IntMatrix::from_rows(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
    for step in &steps {
        let (block, size) = match step {
            Orbit::Cycle => (cycle.clone(), 3),
            Orbit::Fixed => (IntMatrix::identity(1), 1),
        };
        rho = rho.block_diag(&block);
        gram = gram.direct_sum(&diag(&vec![-1; size]));
    }
    let n = gram.rank();
    if n != 10 {
        return Err(Error::Internal(format!("{spec} has Picard rank {n}, expected 10")));
    }
    let rho = RhoLattice::new(gram.clone(), rho)?;
    let mut d = vec![BigInt::from(3)];
    d.extend(std::iter::repeat(BigInt::from(-1)).take(n - 1));
    if gram.norm(&d) != BigInt::from(0) {
        return Err(Error::Internal(format!("double curve of {spec} has nonzero square")));
    }
    if rho.apply(&d) != d {
        return Err(Error::Internal(format!("double curve of {spec} is not ρ-fixed")));
    }
    let core_rank = match terminal {
        Terminal::Plane => 0,
        Terminal::DelPezzo(ade) => ade.rank(),
    };
    let core_rows = if core_rank == 0 {
        IntMatrix::zeros(0, n)
    } else {
        let r = del_pezzo_roots(core_rank);
        let padded: Vec<Vec<BigInt>> = r
            .row_iter()
            .map(|row| {
                let mut v = row.to_vec();
                v.resize(n, BigInt::from(0));
                v
            })
            .collect();
        IntMatrix::from_big_rows(padded, n)
    };
    let kperp_core = gram.sublattice(core_rows)?;
    Ok(ComponentModel {
        spec: spec.clone(),
        rho,
        d,
        kperp_core,
        exceptional_orbits: steps,
    })
}

/// Orthogonal complement of the `ρ`-fixed part and its root type.
pub fn primitive_picard(c: &ComponentModel) -> Result<(Sublattice, RootSystemType)> {
    let prim = c.rho.fixed_sublattice().orth_complement();
    let l = prim.as_lattice();
    if prim.rank() > 0 && !l.is_negative_definite() {
        return Err(Error::Indefinite);
    }
    let (t, _) = root_system(&l)?;
    Ok((prim, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_types() {
        let want = ["E6+A2", "E8", "A2^3", "E6", "A2^2", "A2"];
        for (spec, w) in ComponentSpec::rows().iter().zip(want) {
            let c = build_component(spec).unwrap();
            let (prim, t) = primitive_picard(&c).unwrap();
            assert_eq!(t, w.parse().unwrap(), "{spec}");
            assert_eq!(prim.rank(), t.rank(), "{spec}");
            assert!(c.picard().is_unimodular());
        }
    }

    #[test]
    fn del_pezzo_roots_have_cartan_gram() {
        for ade in [Ade::E(6), Ade::E(8)] {
            assert!(del_pezzo(ade).is_ok());
        }
    }

    #[test]
    fn unknown_row_is_rejected() {
        assert!(build_component(&ComponentSpec::new(4, &[(0, 1)])).is_err());
    }
}
