//! Standard group constructors and the built-in catalog.

use crate::error::{Error, Result};
use crate::groupspec::GroupSpec;
use crate::perm::Permutation;
use crate::util;

fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).expect("constructor builds a bijection")
}

fn n_cycle(n: usize) -> Permutation {
    perm((0..n as u32).map(|i| (i + 1) % n as u32).collect())
}

/// Cyclic group of order `n` on `n` points.
pub fn cyclic(n: usize) -> GroupSpec {
    let gens = if n > 1 { vec![n_cycle(n)] } else { vec![] };
    GroupSpec::new(format!("Z{n}"), n.max(1), gens)
}

/// `(Z_p)^k` on `p·k` points.
pub fn elementary_abelian(p: usize, k: usize) -> GroupSpec {
    let mut spec = cyclic(p);
    for _ in 1..k {
        spec = spec.product(&cyclic(p), "");
    }
    spec.name = format!("Z{p}^{k}");
    spec
}

/// Dihedral group of order `order` (symmetries of an `order/2`-gon).
pub fn dihedral(order: usize) -> GroupSpec {
    assert!(order >= 6 && order % 2 == 0, "dihedral order must be even and at least 6");
    let m = order / 2;
    let reflection = perm((0..m).map(|i| ((m - i) % m) as u32).collect());
    GroupSpec::new(format!("D{order}"), m, vec![n_cycle(m), reflection])
}

/// Dicyclic group of order `4m` in its regular representation; `m = 2` is
/// the quaternion group Q8, `m = 4` the generalized quaternion group Q16.
pub fn dicyclic(m: usize) -> GroupSpec {
    let n = 2 * m;
    // element a^k b^e has index k + n·e
    let mul = |(k, e): (usize, usize), (l, f): (usize, usize)| -> (usize, usize) {
        let l = if e == 1 { n - l % n } else { l };
        let extra = if e == 1 && f == 1 { m } else { 0 };
        ((k + l + extra) % n, e ^ f)
    };
    let left = |x: (usize, usize)| {
        perm(
            (0..2 * n)
                .map(|y| {
                    let (k, e) = mul(x, (y % n, y / n));
                    (k + n * e) as u32
                })
                .collect(),
        )
    };
    GroupSpec::new(format!("Q{}", 4 * m), 2 * n, vec![left((1, 0)), left((0, 1))])
}

pub fn symmetric(n: usize) -> GroupSpec {
    let gens = if n > 2 {
        vec![n_cycle(n), perm([1, 0].into_iter().chain(2..n as u32).collect())]
    } else {
        cyclic(n).generators
    };
    GroupSpec::new(format!("S{n}"), n, gens)
}

pub fn alternating(n: usize) -> GroupSpec {
    assert!(n >= 3);
    // 3-cycles (0 1 i) generate A_n
    let gens = (2..n)
        .map(|i| {
            let mut images: Vec<u32> = (0..n as u32).collect();
            images[0] = 1;
            images[1] = i as u32;
            images[i] = 0;
            perm(images)
        })
        .collect();
    GroupSpec::new(format!("A{n}"), n, gens)
}

/// The subgroup `{x ↦ a·x + b}` of `AGL(1, p)` whose multipliers form the
/// subgroup of order `d` in `(Z/p)^*`. Named `AGL(1,p)d<d>`; order `p·d`.
pub fn affine_group(p: usize, d: usize) -> Result<GroupSpec> {
    if !util::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if d == 0 || (p - 1) % d != 0 {
        return Err(Error::InvalidArgument(format!("{d} does not divide {}", p - 1)));
    }
    let root = util::smallest_primitive_root(p);
    let multiplier = util::pow_mod(root, (p - 1) / d, p);
    let mut gens = vec![n_cycle(p)];
    if multiplier != 1 {
        gens.push(perm((0..p).map(|x| (x * multiplier % p) as u32).collect()));
    }
    Ok(GroupSpec::new(format!("AGL(1,{p})d{d}"), p, gens))
}

/// `F_p^2 ⋊ ⟨matrices⟩` acting on the `p²` points of the affine plane;
/// point `(x, y)` has index `x + p·y` and matrices act on column vectors.
pub fn affine_plane(p: usize, name: &str, matrices: &[[[usize; 2]; 2]]) -> Result<GroupSpec> {
    if !util::is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let map = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
        perm(
            (0..p * p)
                .map(|i| {
                    let (x, y) = f(i % p, i / p);
                    (x % p + p * (y % p)) as u32
                })
                .collect(),
        )
    };
    let mut gens = vec![map(&|x, y| (x + 1, y)), map(&|x, y| (x, y + 1))];
    for m in matrices {
        if (m[0][0] * m[1][1] % p + p - m[0][1] * m[1][0] % p) % p == 0 {
            return Err(Error::InvalidArgument("singular matrix".into()));
        }
        let g = map(&|x, y| (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y));
        if !g.is_identity() {
            gens.push(g);
        }
    }
    Ok(GroupSpec::new(name, p * p, gens))
}

/// `F_7^2 ⋊ S3` with `S3` acting through its 2-dimensional irreducible
/// representation: soluble, not supersoluble, order 294.
pub fn z7_squared_by_s3() -> GroupSpec {
    // on the basis e1 - e2, e2 - e3 of the sum-zero plane (coefficients mod 7)
    let rotation = [[0, 6], [1, 6]];
    let reflection = [[6, 1], [0, 1]];
    affine_plane(7, "Z7^2:S3", &[rotation, reflection]).expect("valid parameters")
}

/// The shipped universe of test groups, in a fixed order.
pub fn builtin_catalog() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in (1..=16).chain([20, 24]) {
        out.push(cyclic(n));
    }
    for (p, k) in [(2, 2), (2, 3), (3, 2), (5, 2), (3, 3)] {
        out.push(elementary_abelian(p, k));
    }
    out.push(cyclic(4).product(&cyclic(2), "Z4xZ2"));
    out.push(cyclic(9).product(&cyclic(3), "Z9xZ3"));
    for order in (8..=32).step_by(2) {
        out.push(dihedral(order));
    }
    out.push(dicyclic(2));
    out.push(dicyclic(4));
    out.push(symmetric(3));
    out.push(symmetric(4));
    out.push(alternating(4));
    out.push(alternating(5));
    out.push(symmetric(3).product(&cyclic(5), "S3xZ5"));
    out.push(symmetric(3).product(&symmetric(3), "S3xS3"));
    for p in [3, 5, 7, 11, 13, 17] {
        for d in (1..p).filter(|d| (p - 1) % d == 0) {
            out.push(affine_group(p, d).expect("valid parameters"));
        }
    }
    out.push(alternating(4).product(&cyclic(5), "A4xZ5"));
    out.push(dicyclic(2).product(&cyclic(3), "Q8xZ3"));
    out.push(dihedral(8).product(&cyclic(3), "D8xZ3"));
    out.push(z7_squared_by_s3());
    out
}

pub fn find(name: &str) -> Option<GroupSpec> {
    builtin_catalog().into_iter().find(|s| s.name == name)
}
