//! Built-in group constructors and automorphisms.

use std::sync::Arc;

use crate::actions::ActionOnGroup;
use crate::error::{Error, Result};
use crate::group::{Elem, Group, DEFAULT_ORDER_CAP};

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

/// Cyclic group `Cn`; element `k` is `a^k`.
pub fn cyclic(n: usize) -> Group {
    assert!(n > 0);
    let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    Group::from_flat(n, mul).with_names((0..n).map(|k| power_name("a", k)).collect())
}

/// `C_{n1} × C_{n2} × …` with mixed-radix indices (first factor fastest).
pub fn abelian(factors: &[usize]) -> Group {
    let n: usize = factors.iter().product();
    let digits = |mut x: usize| {
        factors
            .iter()
            .map(|&f| {
                let d = x % f;
                x /= f;
                d
            })
            .collect::<Vec<_>>()
    };
    let encode = |d: &[usize]| d.iter().rev().zip(factors.iter().rev()).fold(0, |acc, (&x, &f)| acc * f + x);
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        let da = digits(a);
        for b in 0..n {
            let db = digits(b);
            let sum: Vec<usize> = da.iter().zip(&db).zip(factors).map(|((x, y), f)| (x + y) % f).collect();
            mul[a * n + b] = encode(&sum) as u32;
        }
    }
    let names = (0..n).map(|x| format!("{:?}", digits(x))).collect();
    Group::from_flat(n, mul).with_names(names)
}

/// Index of the rotation `a^k` in [`dihedral`].
pub fn rot(k: usize) -> Elem {
    k
}

/// Index of the reflection `r a^k` in `dihedral(n)`.
pub fn refl(n: usize, k: usize) -> Elem {
    n + k % n
}

/// Dihedral group of order `2n`, `⟨a, r | aⁿ = r² = 1, r a r = a⁻¹⟩`.
/// Element `s·n + k` is `r^s a^k`.
pub fn dihedral(n: usize) -> Group {
    assert!(n > 0);
    let order = 2 * n;
    let mut mul = vec![0u32; order * order];
    for x in 0..order {
        let (s, k) = (x / n, x % n);
        for y in 0..order {
            let (t, l) = (y / n, y % n);
            let k2 = if t == 1 { (n - k) % n } else { k };
            mul[x * order + y] = (((s + t) % 2) * n + (k2 + l) % n) as u32;
        }
    }
    let names = (0..order)
        .map(|x| match (x / n, x % n) {
            (0, k) => power_name("a", k),
            (_, 0) => "r".into(),
            (_, k) => format!("r{}", power_name("a", k)),
        })
        .collect();
    Group::from_flat(order, mul).with_names(names)
}

/// `Q8`, indexed `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion8() -> Group {
    // unit products: (unit, sign)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mut mul = vec![0u32; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (u, s) = UNIT[x / 2][y / 2];
            mul[x * 8 + y] = (2 * u + (s + x % 2 + y % 2) % 2) as u32;
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    Group::from_flat(8, mul).with_names(names)
}

/// Upper unitriangular 3×3 matrices over `F_p`, order `p³`. Element
/// `a + p·b + p²·c` is the matrix with entries `a, b` above the diagonal and
/// `c` in the corner; `(a,b,c)(a′,b′,c′) = (a+a′, b+b′, c+c′+ab′)`.
pub fn heisenberg(p: usize) -> Group {
    let n = p * p * p;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
        for y in 0..n {
            let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
            let z = (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
            mul[x * n + y] = z as u32;
        }
    }
    Group::from_flat(n, mul)
}

/// `G × H`; the pair `(g, h)` has index `g + |G|·h`.
pub fn direct_product(g: &Group, h: &Group) -> Group {
    let (a, b) = (g.order(), h.order());
    let n = a * b;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = (g.mul(x % a, y % a) + a * h.mul(x / a, y / a)) as u32;
        }
    }
    let names = (0..n).map(|x| format!("({},{})", g.name(x % a), h.name(x / a))).collect();
    Group::from_flat(n, mul).with_names(names)
}

/// Symmetric group on `n` points from an n-cycle and a transposition.
pub fn symmetric(n: usize) -> Result<Group> {
    if n <= 1 {
        return Ok(Group::trivial());
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    Group::from_permutations(n, &[cycle, transposition], DEFAULT_ORDER_CAP)
}

/// Alternating group on `n ≥ 3` points, generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Result<Group> {
    if n < 3 {
        return Ok(Group::trivial());
    }
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = i;
            p[i] = 0;
            p
        })
        .collect();
    Group::from_permutations(n, &gens, DEFAULT_ORDER_CAP)
}

/// Named automorphisms usable as generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Auto {
    Identity,
    /// `x ↦ x⁻¹`, abelian targets only.
    Inversion,
    /// `x ↦ x^k`, abelian targets only.
    Power(u64),
    /// Coordinate swap on `X × X` built by [`direct_product`] or [`abelian`]
    /// with two equal factors.
    Swap,
    /// `x ↦ g x g⁻¹`.
    Inner(Elem),
    Explicit(Vec<Elem>),
}

impl Auto {
    /// Parses `id`, `inv`, `swap`, `pow:k` and `conj:g`.
    pub fn parse(s: &str) -> Option<Auto> {
        match s {
            "id" | "identity" => Some(Auto::Identity),
            "inv" | "inversion" => Some(Auto::Inversion),
            "swap" => Some(Auto::Swap),
            _ => {
                let (kind, arg) = s.split_once(':')?;
                let k: u64 = arg.trim().parse().ok()?;
                match kind {
                    "pow" => Some(Auto::Power(k)),
                    "conj" => Some(Auto::Inner(k as Elem)),
                    _ => None,
                }
            }
        }
    }

    /// The permutation of `n` described by this automorphism. Validation
    /// that it really is an automorphism happens when building the action.
    pub fn permutation(&self, n: &Group) -> Result<Vec<Elem>> {
        let all = n.elements();
        match self {
            Auto::Identity => Ok(all.collect()),
            Auto::Inversion | Auto::Power(_) if !n.is_abelian() => Err(Error::NotAbelian),
            Auto::Inversion => Ok(all.map(|x| n.inv(x)).collect()),
            Auto::Power(k) => Ok(all.map(|x| n.pow(x, *k)).collect()),
            Auto::Swap => {
                let side = (n.order() as f64).sqrt().round() as usize;
                if side * side != n.order() {
                    return Err(Error::NotAutomorphism { gen: 0, reason: "swap needs a square order".into() });
                }
                Ok(all.map(|x| x / side + side * (x % side)).collect())
            }
            Auto::Inner(g) => {
                n.check(*g)?;
                Ok(all.map(|x| n.conj(x, n.inv(*g))).collect())
            }
            Auto::Explicit(p) => Ok(p.clone()),
        }
    }
}

/// Action of `actor` on `target` from named generator images.
pub fn action_from_autos(actor: Group, target: Group, gens: &[Elem], autos: &[Auto]) -> Result<ActionOnGroup> {
    let images = autos.iter().map(|a| a.permutation(&target)).collect::<Result<Vec<_>>>()?;
    ActionOnGroup::from_generator_images(Arc::new(actor), Arc::new(target), gens, &images)
}
