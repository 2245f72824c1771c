//! Buchberger's algorithm and the ideal-theoretic queries built on it.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::group::GroupElement;
use crate::linalg::Echelon;
use crate::poly::{Homogeneity, Monomial, MonomialOrder, Poly, Ring, WeightVector};

pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs reduced per basis computation.
    pub budget: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { budget: DEFAULT_BUDGET }
    }
}

/// Complete multivariate division of `f` by `divisors` (same ring as `f`).
pub fn reduce(f: &Poly, divisors: &[Poly]) -> Poly {
    let field = f.field().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some(lm) = p.leading_monomial().cloned() {
        let lc = p.leading_coeff().expect("nonzero").clone();
        let div = divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|m| m.divides(&lm)));
        match div {
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient(&lm).unwrap();
                let c = field.div(&lc, g.leading_coeff().unwrap()).expect("monic divisor");
                p = p.sub_scaled(&c, &q, g);
            }
            None => {
                rem.push((lm, lc));
                p = p.tail();
            }
        }
    }
    f.ring().from_terms(rem)
}

struct PairKey {
    lcm: Monomial,
    order: MonomialOrder,
    i: usize,
    j: usize,
}

impl PartialEq for PairKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for PairKey {}
impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PairKey {
    // reversed so that BinaryHeap pops the smallest lcm, then the smallest (i, j)
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.lcm, &self.lcm)
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`'s order,
/// sorted by increasing leading monomial. `[1]` for the unit ideal, empty for (0).
pub fn buchberger(ring: &Ring, gens: &[Poly], budget: usize) -> Result<Vec<Poly>> {
    let order = ring.order();
    let mut g: Vec<Poly> = Vec::new();
    for f in gens {
        let f = f.to_ring(ring);
        if f.is_zero() {
            continue;
        }
        if f.is_constant() {
            return Ok(vec![ring.one()]);
        }
        let f = f.monic();
        if !g.contains(&f) {
            g.push(f);
        }
    }
    let lm = |p: &Poly| p.leading_monomial().expect("nonzero").clone();
    let mut heap = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            heap.push(PairKey {
                lcm: lm(&g[i]).lcm(&lm(&g[j])),
                order,
                i,
                j,
            });
            pending.insert((i, j));
        }
    }
    let mut reduced = 0usize;
    while let Some(PairKey { lcm, i, j, .. }) = heap.pop() {
        pending.remove(&(i, j));
        let (li, lj) = (lm(&g[i]), lm(&g[j]));
        if li.is_coprime(&lj) {
            continue;
        }
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && lm(&g[k]).divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        reduced += 1;
        if reduced > budget {
            return Err(Error::Budget { limit: budget });
        }
        let s = g[i].mul_monomial(&li.quotient(&lcm).unwrap())?.sub_scaled(
            &ring.field().one(),
            &lj.quotient(&lcm).unwrap(),
            &g[j],
        );
        let r = reduce(&s, &g);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![ring.one()]);
        }
        let r = r.monic();
        let k = g.len();
        let lk = lm(&r);
        g.push(r);
        for (i, gi) in g.iter().enumerate().take(k) {
            heap.push(PairKey {
                lcm: lm(gi).lcm(&lk),
                order,
                i,
                j: k,
            });
            pending.insert((i, k));
        }
    }
    Ok(interreduce(ring, g))
}

fn interreduce(ring: &Ring, g: Vec<Poly>) -> Vec<Poly> {
    let lms: Vec<Monomial> = g.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
    let n = g.len();
    let minimal: Vec<Poly> = (0..n)
        .filter(|&i| !(0..n).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)))
        .map(|i| g[i].clone())
        .collect();
    let mut out: Vec<Poly> = (0..minimal.len())
        .map(|idx| {
            let others: Vec<Poly> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, p)| p.clone())
                .collect();
            reduce(&minimal[idx], &others).monic()
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

type BasisCell = Arc<OnceLock<Result<Arc<Vec<Poly>>>>>;

/// An ideal with Γ-homogeneous generators and a per-order basis cache.
///
/// Clones share the cache. The cache is synchronised: concurrent callers
/// trigger at most one computation per monomial order.
#[derive(Clone)]
pub struct GradedIdeal {
    ring: Ring,
    gens: Vec<Poly>,
    weights: WeightVector,
    config: GroebnerConfig,
    cache: Arc<Mutex<BTreeMap<MonomialOrder, BasisCell>>>,
}

impl std::fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "GradedIdeal[{}; {}]({})",
            self.ring.field(),
            self.ring.nvars(),
            gens.join(", ")
        )
    }
}

impl GradedIdeal {
    pub fn new(ring: &Ring, gens: Vec<Poly>, weights: WeightVector) -> Result<Self> {
        GradedIdeal::with_config(ring, gens, weights, GroebnerConfig::default())
    }

    pub fn with_config(ring: &Ring, gens: Vec<Poly>, weights: WeightVector, config: GroebnerConfig) -> Result<Self> {
        if weights.len() != ring.nvars() {
            return Err(Error::ArityMismatch {
                expected: ring.nvars(),
                found: weights.len(),
            });
        }
        let mut kept = Vec::with_capacity(gens.len());
        for (idx, f) in gens.into_iter().enumerate() {
            if f.nvars() != ring.nvars() {
                return Err(Error::ArityMismatch {
                    expected: ring.nvars(),
                    found: f.nvars(),
                });
            }
            if f.field() != ring.field() {
                return Err(Error::FieldMismatch(ring.field().to_string(), f.field().to_string()));
            }
            if let Homogeneity::NonHomogeneous { first, second } = weights.poly_weight(&f) {
                return Err(Error::NonHomogeneous {
                    generator: idx,
                    first: first.to_string(),
                    second: second.to_string(),
                });
            }
            if !f.is_zero() {
                kept.push(f.to_ring(ring));
            }
        }
        Ok(GradedIdeal {
            ring: ring.clone(),
            gens: kept,
            weights,
            config,
            cache: Arc::default(),
        })
    }

    /// Ideal with the trivial grading (every polynomial is homogeneous).
    pub fn ungraded(ring: &Ring, gens: Vec<Poly>) -> Result<Self> {
        GradedIdeal::new(ring, gens, WeightVector::trivial(ring.nvars()))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn config(&self) -> GroebnerConfig {
        self.config
    }

    /// Same generators with more generators appended (fresh cache).
    pub fn extend(&self, extra: impl IntoIterator<Item = Poly>) -> Result<GradedIdeal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        GradedIdeal::with_config(&self.ring, gens, self.weights.clone(), self.config)
    }

    /// Same generators under a different grading.
    pub fn regrade(&self, weights: WeightVector) -> Result<GradedIdeal> {
        GradedIdeal::with_config(&self.ring, self.gens.clone(), weights, self.config)
    }

    pub fn basis(&self, order: MonomialOrder) -> Result<Arc<Vec<Poly>>> {
        let cell = {
            let mut cache = self.cache.lock().expect("basis cache poisoned");
            cache.entry(order).or_default().clone()
        };
        cell.get_or_init(|| self.compute_basis(order)).clone()
    }

    fn compute_basis(&self, order: MonomialOrder) -> Result<Arc<Vec<Poly>>> {
        let ring = self.ring.with_order(order);
        let basis = buchberger(&ring, &self.gens, self.config.budget)?;
        for b in &basis {
            if let Homogeneity::NonHomogeneous { .. } = self.weights.poly_weight(b) {
                return Err(Error::Internal(format!(
                    "basis element {b} of a homogeneous ideal is not homogeneous"
                )));
            }
        }
        Ok(Arc::new(basis))
    }

    pub fn normal_form(&self, f: &Poly, order: MonomialOrder) -> Result<Poly> {
        let basis = self.basis(order)?;
        let ring = self.ring.with_order(order);
        Ok(reduce(&f.to_ring(&ring), &basis))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f, MonomialOrder::GrevLex)?.is_zero())
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &GradedIdeal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &GradedIdeal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        let b = self.basis(MonomialOrder::GrevLex)?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    /// Intersection with k[x_k..x_{n-1}], as an ideal of the smaller ring.
    pub fn eliminate(&self, k: usize) -> Result<GradedIdeal> {
        assert!(k <= self.nvars(), "cannot eliminate more variables than exist");
        let basis = self.basis(MonomialOrder::BlockElim(k))?;
        let keep: Vec<usize> = (k..self.nvars()).collect();
        let target = Ring::new(self.field().clone(), self.nvars() - k, MonomialOrder::GrevLex);
        let gens: Vec<Poly> = basis.iter().filter_map(|b| b.restrict_vars(&target, &keep)).collect();
        GradedIdeal::with_config(&target, gens, self.weights.select(&keep).without_degrees(), self.config)
    }

    pub fn leading_monomials(&self, order: MonomialOrder) -> Result<Vec<Monomial>> {
        Ok(self
            .basis(order)?
            .iter()
            .map(|b| b.leading_monomial().expect("nonzero basis element").clone())
            .collect())
    }

    /// Largest variable set containing the support of no leading monomial;
    /// -1 for the unit ideal.
    pub fn krull_dimension(&self) -> Result<i64> {
        if self.is_unit()? {
            return Ok(-1);
        }
        let n = self.nvars();
        assert!(n < 64, "too many variables for subset enumeration");
        let masks: Vec<u64> = self
            .leading_monomials(MonomialOrder::GrevLex)?
            .iter()
            .map(|m| {
                m.exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        // a set S is independent when no leading monomial is supported inside S
        let mut best = 0i64;
        for size in (0..=n).rev() {
            if independent_set_of_size(n, size, &masks) {
                best = size as i64;
                break;
            }
        }
        Ok(best)
    }

    /// Standard monomials of a zero-dimensional ideal.
    pub fn staircase(&self) -> Result<Staircase> {
        let dim = self.krull_dimension()?;
        if dim > 0 {
            return Err(Error::NotZeroDimensional { dim });
        }
        let basis = self.basis(MonomialOrder::GrevLex)?;
        let ring = self.ring.with_order(MonomialOrder::GrevLex);
        let lms: Vec<Monomial> = basis.iter().map(|b| b.leading_monomial().unwrap().clone()).collect();
        let n = self.nvars();
        let mut seen: BTreeSet<Monomial> = BTreeSet::new();
        if dim == 0 {
            let mut stack = vec![Monomial::one(n)];
            seen.insert(Monomial::one(n));
            while let Some(m) = stack.pop() {
                for i in 0..n {
                    let next = m.mul(&Monomial::var(n, i))?;
                    if seen.contains(&next) || lms.iter().any(|l| l.divides(&next)) {
                        continue;
                    }
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
        let mut monomials: Vec<Monomial> = seen.into_iter().collect();
        monomials.sort_by(|a, b| ring.cmp(a, b));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Staircase {
            ring,
            basis,
            monomials,
            index,
            weights: self.weights.clone(),
        })
    }

    /// dim_k of each Γ-graded piece of the quotient algebra (every element of Γ listed).
    pub fn graded_hilbert(&self) -> Result<BTreeMap<GroupElement, usize>> {
        Ok(self.staircase()?.graded_dimensions())
    }

    /// Length of the local ring at the origin, by m-adic truncation.
    pub fn local_multiplicity_at_origin(&self) -> Result<usize> {
        let field = self.field();
        if self.gens.iter().any(|g| !field.is_zero(&g.constant_term())) {
            return Err(Error::OriginNotOnScheme);
        }
        let st = self.staircase()?;
        let all: Vec<usize> = (0..self.nvars()).collect();
        Ok(st.truncated_length(&all))
    }
}

fn independent_set_of_size(n: usize, size: usize, masks: &[u64]) -> bool {
    fn rec(start: usize, n: usize, left: usize, cur: u64, masks: &[u64]) -> bool {
        if left == 0 {
            return true;
        }
        for i in start..n {
            if n - i < left {
                return false;
            }
            let next = cur | 1 << i;
            // adding variables only makes more monomials fit inside S, so prune early
            if masks.iter().any(|&m| m & !next == 0) {
                continue;
            }
            if rec(i + 1, n, left - 1, next, masks) {
                return true;
            }
        }
        false
    }
    if size == 0 {
        return !masks.contains(&0);
    }
    rec(0, n, size, 0, masks)
}

/// Monomial basis of a finite-dimensional quotient k[x]/I.
#[derive(Clone, Debug)]
pub struct Staircase {
    ring: Ring,
    basis: Arc<Vec<Poly>>,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    weights: WeightVector,
}

impl Staircase {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        reduce(&f.to_ring(&self.ring), &self.basis)
    }

    /// Coordinates of the class of `f` in the monomial basis.
    pub fn coords(&self, f: &Poly) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.len()];
        for (m, c) in self.reduce(f).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Matrix of multiplication by x_i, as images of the basis monomials.
    pub fn multiplication(&self, i: usize) -> Vec<Vec<Scalar>> {
        let n = self.ring.nvars();
        self.monomials
            .iter()
            .map(|m| {
                let prod = m.mul(&Monomial::var(n, i)).expect("small exponents");
                self.coords(&self.ring.monomial(prod))
            })
            .collect()
    }

    /// dim A / J^N A at stabilisation, J generated by the given variables:
    /// the total length of A at the points of V(J).
    pub fn truncated_length(&self, vars: &[usize]) -> usize {
        let d = self.len();
        if vars.is_empty() || d == 0 {
            return d;
        }
        let field = self.field().clone();
        let mats: Vec<Vec<Vec<Scalar>>> = vars.iter().map(|&i| self.multiplication(i)).collect();
        let mut current = Echelon::new(&field, d);
        for k in 0..d {
            let mut e = vec![field.zero(); d];
            e[k] = field.one();
            current.insert(e);
        }
        loop {
            let mut next = Echelon::new(&field, d);
            for w in current.basis() {
                for mat in &mats {
                    let mut img = vec![field.zero(); d];
                    for (c, col) in w.iter().zip(mat) {
                        if field.is_zero(c) {
                            continue;
                        }
                        for (x, y) in img.iter_mut().zip(col) {
                            *x = field.add(x, &field.mul(c, y));
                        }
                    }
                    next.insert(img);
                }
            }
            if next.rank() == current.rank() {
                return d - current.rank();
            }
            current = next;
        }
    }

    pub fn graded_dimensions(&self) -> BTreeMap<GroupElement, usize> {
        let mut out: BTreeMap<GroupElement, usize> =
            self.weights.group().elements().into_iter().map(|g| (g, 0)).collect();
        for m in &self.monomials {
            *out.entry(self.weights.monomial_weight(m)).or_default() += 1;
        }
        out
    }

    /// Basis indices of the monomials of weight `g`.
    pub fn piece(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| &self.weights.monomial_weight(&self.monomials[k]) == g)
            .collect()
    }

    pub fn basis_element(&self, k: usize) -> Poly {
        self.ring.monomial(self.monomials[k].clone())
    }
}
