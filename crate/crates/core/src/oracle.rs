//! Brute-force ground truth.
//!
//! Scans S_n in lexicographic one-line order, filters by class membership
//! and (optionally) the involution predicate, and accumulates the joint
//! (cyc, fix, exc, inv) distribution as an exact polynomial. Every
//! generating function and both bijections are checked against this module.
//!
//! Class filtering applies the cheap necessary condition first — members of
//! either class keep their maximum in the last three positions — before the
//! full definitional pattern search. The shortcut is itself guarded by an
//! equivalence test in the suite.

use alloc::vec::Vec;

use crate::patterns::{in_class_values, max_position_ok, ClassId};
use crate::perm::{cycle_count_values, is_involution_values, Permutation};
use crate::series::MultiPoly;
use crate::{Error, Result};

/// Largest n enumerated without an explicit override (11! is about 4e7).
pub const DEFAULT_SIZE_CAP: usize = 11;

/// What to enumerate: a class slice of S_n (or all of it), optionally
/// restricted to involutions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DistributionQuery {
    /// None enumerates all of S_n.
    pub class: Option<ClassId>,
    pub n: usize,
    pub involutions_only: bool,
    /// Resource guard; queries with `n > size_cap` are refused.
    pub size_cap: usize,
}

impl DistributionQuery {
    pub fn new(class: Option<ClassId>, n: usize) -> Self {
        DistributionQuery {
            class,
            n,
            involutions_only: false,
            size_cap: DEFAULT_SIZE_CAP,
        }
    }

    pub fn class(class: ClassId, n: usize) -> Self {
        DistributionQuery::new(Some(class), n)
    }

    pub fn all_of_s_n(n: usize) -> Self {
        DistributionQuery::new(None, n)
    }

    pub fn involutions_only(mut self, flag: bool) -> Self {
        self.involutions_only = flag;
        self
    }

    pub fn with_size_cap(mut self, cap: usize) -> Self {
        self.size_cap = cap;
        self
    }

    fn check(&self) -> Result<()> {
        if self.n > self.size_cap {
            return Err(Error::SizeCapExceeded {
                n: self.n,
                cap: self.size_cap,
            });
        }
        Ok(())
    }

    fn admits(&self, values: &[u8]) -> bool {
        if self.involutions_only && !is_involution_values(values) {
            return false;
        }
        match self.class {
            None => true,
            Some(class) => max_position_ok(values) && in_class_values(values, class),
        }
    }
}

fn factorial(n: usize) -> Result<u128> {
    let mut acc: u128 = 1;
    for i in 2..=n as u128 {
        acc = acc
            .checked_mul(i)
            .ok_or(Error::SizeCapExceeded { n, cap: 34 })?;
    }
    Ok(acc)
}

/// Permutation of 1..=n with the given lexicographic rank, via the factorial
/// number system.
fn unrank(n: usize, mut rank: u128) -> Result<Vec<u8>> {
    let mut fact = factorial(n)?;
    let mut pool: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        fact /= (n - i) as u128;
        let d = (rank / fact) as usize;
        rank %= fact;
        out.push(pool.remove(d));
    }
    Ok(out)
}

/// In-place lexicographic successor; false once the values are descending.
fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Runs `f` on every admitted permutation in the shard's contiguous
/// lexicographic block. Shards partition S_n exactly.
fn fold_shard<F: FnMut(&[u8]) -> Result<()>>(
    q: &DistributionQuery,
    shard: usize,
    shard_count: usize,
    mut f: F,
) -> Result<()> {
    q.check()?;
    assert!(shard_count > 0 && shard < shard_count, "bad shard index");
    let total = factorial(q.n)?;
    let start = total * shard as u128 / shard_count as u128;
    let end = total * (shard + 1) as u128 / shard_count as u128;
    if start == end {
        return Ok(());
    }
    let mut values = unrank(q.n, start)?;
    let mut remaining = end - start;
    loop {
        if q.admits(&values) {
            f(&values)?;
        }
        remaining -= 1;
        if remaining == 0 {
            break;
        }
        let more = next_permutation(&mut values);
        debug_assert!(more, "ranks stay within n!");
    }
    Ok(())
}

/// All permutations matching the query, lexicographically, each exactly once.
pub fn enumerate_class(q: &DistributionQuery) -> Result<ClassEnumerator> {
    q.check()?;
    Ok(ClassEnumerator {
        q: *q,
        values: (1..=q.n as u8).collect(),
        remaining: factorial(q.n)?,
    })
}

/// Streaming lexicographic enumeration. See [`enumerate_class`].
#[derive(Clone, Debug)]
pub struct ClassEnumerator {
    q: DistributionQuery,
    values: Vec<u8>,
    remaining: u128,
}

impl Iterator for ClassEnumerator {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        while self.remaining > 0 {
            self.remaining -= 1;
            let hit = self.q.admits(&self.values);
            let item = if hit {
                Some(Permutation::from_values_unchecked(self.values.clone()))
            } else {
                None
            };
            if self.remaining > 0 {
                let more = next_permutation(&mut self.values);
                debug_assert!(more);
            }
            if item.is_some() {
                return item;
            }
        }
        None
    }
}

/// Joint distribution: the sum of t^cyc u^fix x^exc y^inv over every
/// permutation matching the query.
pub fn distribution(q: &DistributionQuery) -> Result<MultiPoly> {
    distribution_shard(q, 0, 1)
}

/// The same sum restricted to one of `shard_count` contiguous lexicographic
/// blocks. Adding all shards reproduces `distribution` exactly, whatever the
/// shard count; callers may run shards on separate threads.
pub fn distribution_shard(
    q: &DistributionQuery,
    shard: usize,
    shard_count: usize,
) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    fold_shard(q, shard, shard_count, |values| {
        let stats = Permutation::from_values_unchecked(values.to_vec()).stats();
        acc = acc.add(&MultiPoly::term(1, stats.into()))?;
        Ok(())
    })?;
    Ok(acc)
}

/// Number of class members of size n that are a single n-cycle.
pub fn count_cyclic(class: ClassId, n: usize, size_cap: usize) -> Result<u64> {
    let q = DistributionQuery::class(class, n).with_size_cap(size_cap);
    let mut count = 0u64;
    fold_shard(&q, 0, 1, |values| {
        if cycle_count_values(values) == 1 {
            count += 1;
        }
        Ok(())
    })?;
    Ok(count)
}
