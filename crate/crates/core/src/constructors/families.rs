use super::matrix::{find_irreducible_element, Matrix2p};
use crate::error::{GroupError, Result};
use crate::permcore::{Caps, PermGroup, Permutation};

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructed bijection")
}

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &pt) in pts.iter().enumerate() {
        images[pt] = pts[(i + 1) % pts.len()];
    }
    perm(images)
}

fn positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(GroupError::InvalidParameter(format!(
            "{name} requires n >= 1"
        )));
    }
    Ok(())
}

/// Regular cyclic group of order `n` on `n` points.
pub fn cyclic(n: usize, caps: Caps) -> Result<PermGroup> {
    positive("cyclic", n)?;
    caps.check_degree(n)?;
    PermGroup::new(n, vec![cycle_on(n, 0..n)])
}

/// Dihedral group of order `2n` acting on the `n` vertices of a polygon.
pub fn dihedral(n: usize, caps: Caps) -> Result<PermGroup> {
    if n < 3 {
        return Err(GroupError::InvalidParameter(
            "dihedral requires n >= 3 for a faithful polygon action".into(),
        ));
    }
    caps.check_degree(n)?;
    let reflection = perm((0..n).map(|i| (n - i) % n).collect());
    PermGroup::new(n, vec![cycle_on(n, 0..n), reflection])
}

pub fn symmetric(n: usize, caps: Caps) -> Result<PermGroup> {
    positive("symmetric", n)?;
    caps.check_degree(n)?;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_on(n, 0..n));
        gens.push(cycle_on(n, [0, 1]));
    }
    PermGroup::new(n, gens)
}

/// Generated by the 3-cycles `(1 2 k)`.
pub fn alternating(n: usize, caps: Caps) -> Result<PermGroup> {
    positive("alternating", n)?;
    caps.check_degree(n)?;
    PermGroup::new(n, (2..n).map(|k| cycle_on(n, [0, 1, k])).collect())
}

/// Translations of the vector space of dimension `k` over the field of order `p`,
/// acting regularly on `p^k` points. Vector `(x_0, …, x_{k-1})` is point `Σ x_i p^i`.
pub fn elementary_abelian(p: usize, k: usize, caps: Caps) -> Result<PermGroup> {
    if !crate::arith::is_prime(p as u64) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(GroupError::InvalidParameter(
            "elementary abelian requires k >= 1".into(),
        ));
    }
    let degree = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if degree > caps.max_degree as u128 {
        return Err(GroupError::DegreeCapExceeded {
            degree: degree.min(usize::MAX as u128) as usize,
            cap: caps.max_degree,
        });
    }
    let degree = degree as usize;
    let gens = (0..k)
        .map(|i| {
            let step = p.pow(i as u32);
            perm(
                (0..degree)
                    .map(|pt| {
                        let digit = (pt / step) % p;
                        pt - digit * step + ((digit + 1) % p) * step
                    })
                    .collect(),
            )
        })
        .collect();
    PermGroup::new(degree, gens)
}

/// Disjoint union action: `g` on the first block of points, `h` on the second.
pub fn direct_product(g: &PermGroup, h: &PermGroup, caps: Caps) -> Result<PermGroup> {
    let (dg, dh) = (g.degree(), h.degree());
    caps.check_degree(dg + dh)?;
    let mut gens = Vec::new();
    for x in g.generators() {
        gens.push(perm(
            (0..dg).map(|i| x.apply(i)).chain(dg..dg + dh).collect(),
        ));
    }
    for y in h.generators() {
        gens.push(perm(
            (0..dg).chain((0..dh).map(|i| dg + y.apply(i))).collect(),
        ));
    }
    PermGroup::new(dg + dh, gens)
}

/// Affine group generated by the two unit translations and `m`, acting on the
/// `p²` vectors of the plane. Vector `(x, y)` is point `x + p·y`.
pub fn semidirect_affine(m: &Matrix2p, caps: Caps) -> Result<PermGroup> {
    let p = m.p as usize;
    let degree = p * p;
    caps.check_degree(degree)?;
    let point = |x: u64, y: u64| x as usize + p * y as usize;
    let on_vectors = |f: &dyn Fn(u64, u64) -> (u64, u64)| {
        perm(
            (0..degree)
                .map(|pt| {
                    let (x, y) = f((pt % p) as u64, (pt / p) as u64);
                    point(x, y)
                })
                .collect(),
        )
    };
    let q = m.p;
    let gens = vec![
        on_vectors(&|x, y| ((x + 1) % q, y)),
        on_vectors(&|x, y| (x, (y + 1) % q)),
        on_vectors(&|x, y| m.apply(x, y)),
    ];
    PermGroup::new(degree, gens)
}

/// Parameters of the showcase group: the plane over the field of order 29
/// extended by an irreducibly acting cyclic group of order 15.
pub const EXAMPLE_PRIME: u64 = 29;
pub const EXAMPLE_ACTING_ORDER: u64 = 15;

/// The acting matrix chosen for [`example_group`].
pub fn example_matrix() -> Matrix2p {
    find_irreducible_element(EXAMPLE_PRIME, EXAMPLE_ACTING_ORDER)
        .expect("an irreducible element of order 15 exists in GL(2,29)")
}

/// `E_{29²} ⋊ Z₁₅` of order 12615 on 841 points.
pub fn example_group() -> PermGroup {
    semidirect_affine(&example_matrix(), Caps::default())
        .expect("841 points within the default degree cap")
}

/// PSL(2, q) acting on the projective line: points `0..q` are field elements,
/// point `q` is infinity. Generated by `x ↦ x + 1` and `x ↦ −1/x`.
pub fn psl2(q: usize) -> Result<PermGroup> {
    if ![5, 7, 11].contains(&q) {
        return Err(GroupError::InvalidParameter(format!(
            "psl2 supports q in {{5, 7, 11}}, got {q}"
        )));
    }
    let inf = q;
    let inverse = |x: usize| (1..q).find(|&y| x * y % q == 1).unwrap();
    let shift = perm(
        (0..=q)
            .map(|x| if x == inf { inf } else { (x + 1) % q })
            .collect(),
    );
    let invert = perm(
        (0..=q)
            .map(|x| match x {
                0 => inf,
                _ if x == inf => 0,
                _ => (q - inverse(x)) % q,
            })
            .collect(),
    );
    PermGroup::new(q + 1, vec![shift, invert])
}
