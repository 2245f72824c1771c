//! Finite abelian character groups stored as products of cyclic factors.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(Vec<u64>);

/// A surjection Γ -> Z/p, given by the images of the cyclic generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicQuotient {
    p: u64,
    images: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidGroup("at least one cyclic factor is required".into()));
        }
        if factors.contains(&0) {
            return Err(Error::InvalidGroup("cyclic factors must be positive".into()));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        AbelianGroup { factors: vec![1] }
    }

    pub fn cyclic(n: u64) -> Self {
        AbelianGroup::new(vec![n]).expect("positive order")
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    /// Reduces arbitrary integers componentwise into canonical residues.
    pub fn element(&self, comps: &[i64]) -> Result<GroupElement> {
        if comps.len() != self.factors.len() {
            return Err(Error::InvalidWeights(format!(
                "weight has {} components but the group has {} factors",
                comps.len(),
                self.factors.len()
            )));
        }
        Ok(GroupElement(
            comps
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.factors.len() && g.0.iter().zip(&self.factors).all(|(c, n)| c < n)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((x, y), n)| (x + y) % n)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.factors).map(|(x, n)| (n - x % n) % n).collect())
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &GroupElement, k: u64) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.factors)
                .map(|(x, n)| ((*x as u128 * k as u128) % *n as u128) as u64)
                .collect(),
        )
    }

    /// lcm over components of n_i / gcd(n_i, g_i).
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        g.0.iter()
            .zip(&self.factors)
            .map(|(&x, &n)| n / n.gcd(&x))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order();
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    /// All elements, in lexicographic order of components.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for &n in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(GroupElement).collect()
    }

    /// Surjections Γ -> Z/p up to unit scaling, first nonzero image normalized
    /// to 1, in lexicographic order of image vectors.
    pub fn mu_p_quotients(&self, p: u64) -> Vec<CyclicQuotient> {
        if !is_prime(p) {
            return Vec::new();
        }
        let free: Vec<bool> = self.factors.iter().map(|n| n % p == 0).collect();
        let mut out = Vec::new();
        let mut images = vec![0u64; self.factors.len()];
        loop {
            let first = images.iter().find(|&&c| c != 0);
            if first == Some(&1) {
                out.push(CyclicQuotient {
                    p,
                    images: images.clone(),
                });
            }
            // next vector in lexicographic order over the admissible coordinates
            let mut i = images.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if !free[i] {
                    continue;
                }
                images[i] += 1;
                if images[i] < p {
                    break;
                }
                images[i] = 0;
            }
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z/{n}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl GroupElement {
    pub fn components(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl CyclicQuotient {
    pub fn new(group: &AbelianGroup, p: u64, images: Vec<i64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidQuotient(format!("{p} is not prime")));
        }
        if images.len() != group.rank() {
            return Err(Error::InvalidQuotient(format!(
                "expected {} images, found {}",
                group.rank(),
                images.len()
            )));
        }
        let images: Vec<u64> = images.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
        for (i, (&img, &n)) in images.iter().zip(group.factors()).enumerate() {
            if img != 0 && n % p != 0 {
                return Err(Error::InvalidQuotient(format!(
                    "image of generator {i} must vanish since {p} does not divide {n}"
                )));
            }
        }
        if images.iter().all(|&c| c == 0) {
            return Err(Error::InvalidQuotient("map is not surjective".into()));
        }
        Ok(CyclicQuotient { p, images })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }

    pub fn target(&self) -> AbelianGroup {
        AbelianGroup::cyclic(self.p)
    }

    /// Σ images_i · g_i in Z/p.
    pub fn apply(&self, g: &GroupElement) -> GroupElement {
        let v =
            g.0.iter()
                .zip(&self.images)
                .fold(0u64, |acc, (&x, &img)| (acc + (x % self.p) * img) % self.p);
        GroupElement(vec![v])
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|c| c.to_string()).collect();
        write!(f, "Z/{} <- ({})", self.p, parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_orders() {
        let g = AbelianGroup::new(vec![4]).unwrap();
        assert_eq!(g.element_order(&g.zero()), 1);
        assert_eq!(g.element_order(&g.element(&[1]).unwrap()), 4);
        let h = AbelianGroup::new(vec![4, 9]).unwrap();
        assert_eq!(h.element_order(&h.element(&[2, 3]).unwrap()), 6);
    }

    #[test]
    fn p_groups() {
        assert!(AbelianGroup::new(vec![4, 2]).unwrap().is_p_group(2));
        assert!(!AbelianGroup::new(vec![6]).unwrap().is_p_group(2));
        assert!(AbelianGroup::trivial().is_p_group(3));
    }

    #[test]
    fn quotient_examples() {
        let z2 = AbelianGroup::cyclic(2);
        let qs = z2.mu_p_quotients(2);
        assert_eq!(qs.len(), 1);
        assert_eq!(qs[0].images(), &[1]);

        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        let imgs: Vec<Vec<u64>> = v4.mu_p_quotients(2).iter().map(|q| q.images().to_vec()).collect();
        assert_eq!(imgs, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);

        let z4 = AbelianGroup::cyclic(4);
        let qs = z4.mu_p_quotients(2);
        assert_eq!(qs.len(), 1);
        assert_eq!(qs[0].images(), &[1]);

        assert!(AbelianGroup::cyclic(3).mu_p_quotients(2).is_empty());
    }

    #[test]
    fn quotient_counts_match_brute_force() {
        // Oracle: count index-p subgroups as kernels of all surjective homs,
        // each kernel hit by exactly p-1 homs.
        for factors in [
            vec![2, 2, 2],
            vec![4, 2],
            vec![3, 3],
            vec![6, 2],
            vec![8],
            vec![2, 4, 8],
        ] {
            let g = AbelianGroup::new(factors.clone()).unwrap();
            if g.order() > 64 {
                continue;
            }
            for p in [2u64, 3, 5] {
                let mut surjections = 0u64;
                let free: Vec<u64> = g.factors().iter().map(|n| if n % p == 0 { p } else { 1 }).collect();
                let total: u64 = free.iter().product();
                for idx in 0..total {
                    let mut rest = idx;
                    let imgs: Vec<u64> = free
                        .iter()
                        .map(|&f| {
                            let c = rest % f;
                            rest /= f;
                            c
                        })
                        .collect();
                    if imgs.iter().any(|&c| c != 0) {
                        surjections += 1;
                    }
                }
                let r = free.iter().filter(|&&f| f == p).count() as u32;
                let expected = (p.pow(r) - 1) / (p - 1);
                assert_eq!(surjections / (p - 1), expected);
                assert_eq!(g.mu_p_quotients(p).len() as u64, expected, "{factors:?} p={p}");
            }
        }
    }

    #[test]
    fn quotient_validation() {
        let g = AbelianGroup::new(vec![2, 3]).unwrap();
        assert!(CyclicQuotient::new(&g, 2, vec![1, 0]).is_ok());
        assert!(CyclicQuotient::new(&g, 2, vec![1, 1]).is_err());
        assert!(CyclicQuotient::new(&g, 2, vec![0, 0]).is_err());
        assert!(CyclicQuotient::new(&g, 4, vec![1, 0]).is_err());
    }

    #[test]
    fn quotient_is_a_homomorphism() {
        let g = AbelianGroup::new(vec![4, 6]).unwrap();
        let q = CyclicQuotient::new(&g, 2, vec![1, 1]).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                let lhs = q.apply(&g.add(&a, &b));
                let t = q.target();
                assert_eq!(lhs, t.add(&q.apply(&a), &q.apply(&b)));
            }
        }
    }
}
