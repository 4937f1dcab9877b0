//! Finite commutative rings given by explicit addition and multiplication tables.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub const DEFAULT_RING_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    /// Every ideal, sorted by (cardinality, elements); the first is `{0}`, the last `R`.
    ideals: Vec<FixedBitSet>,
}

impl TableRing {
    pub fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::Ring("empty ring tables".into()));
        }
        if size > cap {
            return Err(Error::CapExceeded {
                what: "ring size",
                size,
                cap,
            });
        }
        for (what, table) in [("add", &add), ("mul", &mul)] {
            if table.len() != size || table.iter().any(|row| row.len() != size) {
                return Err(Error::Ring(format!("{what} table must be {size}×{size}")));
            }
            if table.iter().flatten().any(|&v| v >= size) {
                return Err(Error::Ring(format!(
                    "{what} table has an entry outside 0..{size}"
                )));
            }
        }
        let flat = |t: Vec<Vec<usize>>| t.into_iter().flatten().collect::<Vec<_>>();
        let mut ring = TableRing {
            size,
            add: flat(add),
            mul: flat(mul),
            zero: 0,
            one: 0,
            ideals: Vec::new(),
        };
        ring.check_axioms()?;
        ring.ideals = ring.generate_ideals();
        Ok(ring)
    }

    /// `ℤ/n` written out as tables.
    pub fn zmod(n: usize, cap: usize) -> Result<Self> {
        let add = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a * b) % n).collect())
            .collect();
        TableRing::new(add, mul, cap)
    }

    /// Direct product, with `(a, b)` encoded as `a * |S| + b`.
    pub fn product(r: &TableRing, s: &TableRing, cap: usize) -> Result<Self> {
        let m = s.size;
        let n = r.size * m;
        let pair = |x: usize| (x / m, x % m);
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
        };
        let add = table(&|x, y| {
            let ((a, b), (c, d)) = (pair(x), pair(y));
            r.add(a, c) * m + s.add(b, d)
        });
        let mul = table(&|x, y| {
            let ((a, b), (c, d)) = (pair(x), pair(y));
            r.mul(a, c) * m + s.mul(b, d)
        });
        TableRing::new(add, mul, cap)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn ideals(&self) -> &[FixedBitSet] {
        &self.ideals
    }

    pub fn whole(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        s.insert_range(..);
        s
    }

    fn check_axioms(&mut self) -> Result<()> {
        let n = self.size;
        let all = 0..n;
        let fail = |m: &str| Err(Error::Ring(format!("tables fail ring axioms: {m}")));
        let zero = all.clone().find(|&z| (0..n).all(|a| self.add(z, a) == a));
        let one = all.clone().find(|&e| (0..n).all(|a| self.mul(e, a) == a));
        let (Some(zero), Some(one)) = (zero, one) else {
            return fail("missing additive or multiplicative identity");
        };
        self.zero = zero;
        self.one = one;
        for a in 0..n {
            if !(0..n).any(|b| self.add(a, b) == zero) {
                return fail(&format!("{a} has no additive inverse"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition is not commutative");
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplication is not commutative");
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("addition is not associative");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplication is not associative");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("multiplication does not distribute over addition");
                    }
                }
            }
        }
        Ok(())
    }

    /// `aR`, which is already an ideal.
    pub fn principal(&self, a: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        for r in 0..self.size {
            s.insert(self.mul(a, r));
        }
        s
    }

    /// `I + J = {i + j}`.
    pub fn sum(&self, i: &FixedBitSet, j: &FixedBitSet) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.size);
        for a in i.ones() {
            for b in j.ones() {
                s.insert(self.add(a, b));
            }
        }
        s
    }

    /// Every ideal is a finite sum of principal ideals, so closing the
    /// principal ideals under sums reaches all of them.
    fn generate_ideals(&self) -> Vec<FixedBitSet> {
        let mut zero = FixedBitSet::with_capacity(self.size);
        zero.insert(self.zero);
        let principals: Vec<FixedBitSet> = (0..self.size).map(|a| self.principal(a)).collect();
        let mut seen: Vec<FixedBitSet> = vec![zero];
        let mut frontier = 0;
        while frontier < seen.len() {
            let current = seen[frontier].clone();
            frontier += 1;
            for p in &principals {
                if p.is_subset(&current) {
                    continue;
                }
                let next = self.sum(&current, p);
                if !seen.contains(&next) {
                    seen.push(next);
                }
            }
        }
        seen.sort_by(|a, b| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| a.ones().cmp(b.ones()))
        });
        seen
    }

    pub fn is_ideal(&self, s: &FixedBitSet) -> bool {
        s.contains(self.zero)
            && s.ones()
                .all(|a| s.ones().all(|b| s.contains(self.add(a, b))))
            && s.ones()
                .all(|a| (0..self.size).all(|r| s.contains(self.mul(a, r))))
            && s.ones()
                .all(|a| (0..self.size).any(|b| s.contains(b) && self.add(a, b) == self.zero))
    }

    pub fn index_of(&self, s: &FixedBitSet) -> Option<usize> {
        self.ideals.iter().position(|i| i == s)
    }

    /// Distributivity `I ∩ (J + K) = (I ∩ J) + (I ∩ K)` over the whole ideal lattice.
    pub fn is_distributive(&self) -> bool {
        let k = self.ideals.len();
        let index: HashMap<&FixedBitSet, usize> = self
            .ideals
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut join = vec![0usize; k * k];
        let mut meet = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                join[i * k + j] = index[&self.sum(&self.ideals[i], &self.ideals[j])];
                let mut m = self.ideals[i].clone();
                m.intersect_with(&self.ideals[j]);
                meet[i * k + j] = index[&m];
            }
        }
        (0..k).all(|i| {
            (0..k).all(|j| {
                (0..k).all(|l| {
                    meet[i * k + join[j * k + l]] == join[meet[i * k + j] * k + meet[i * k + l]]
                })
            })
        })
    }

    /// `A : r = {s : rs ∈ A}`.
    pub fn colon(&self, a: &FixedBitSet, r: usize) -> FixedBitSet {
        (0..self.size)
            .filter(|&s| a.contains(self.mul(r, s)))
            .collect_set(self.size)
    }

    /// `A_(P) = {r : br ∈ A for some b ∉ P}`.
    pub fn saturation(&self, a: &FixedBitSet, p: &FixedBitSet) -> FixedBitSet {
        (0..self.size)
            .filter(|&r| (0..self.size).any(|b| !p.contains(b) && a.contains(self.mul(b, r))))
            .collect_set(self.size)
    }
}

pub(crate) trait CollectSet: Iterator<Item = usize> + Sized {
    fn collect_set(self, size: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(size);
        for i in self {
            s.insert(i);
        }
        s
    }
}

impl<I: Iterator<Item = usize>> CollectSet for I {}
