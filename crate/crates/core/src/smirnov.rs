//! Smirnov words anchored at zero, their ascent statistics, and the valley
//! hopping classes that produce gamma-coefficients.
//!
//! `S(n, r)` is the set of words `(w_0, ..., w_n)` over `{0, ..., r-1}` with
//! no two equal adjacent letters and `w_0 = w_n = 0`. Indices are zero-based
//! throughout, so `w[k]` is the letter `w_k`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::{Error, IntGammaVector, IntPolynomial, IntSeries, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmirnovWord {
    entries: Vec<u32>,
    r: u32,
}

/// Ascent and descent data of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordStats {
    pub asc: usize,
    pub des: usize,
    pub double_ascents: Vec<usize>,
    pub double_descents: Vec<usize>,
}

impl SmirnovWord {
    pub fn new(entries: Vec<u32>, r: u32) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidWord(format!("{entries:?}: {msg}")));
        if entries.len() < 2 {
            return bad("a word needs at least two letters");
        }
        if entries[0] != 0 || entries[entries.len() - 1] != 0 {
            return bad("first and last letters must be 0");
        }
        if entries.iter().any(|&a| a >= r) {
            return bad("letter out of range");
        }
        if entries.windows(2).any(|p| p[0] == p[1]) {
            return bad("equal adjacent letters");
        }
        Ok(Self { entries, r })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn asc(&self) -> usize {
        ascents(&self.entries)
    }

    pub fn is_double_ascent(&self, k: usize) -> bool {
        let w = &self.entries;
        (1..self.n()).contains(&k) && w[k - 1] < w[k] && w[k] < w[k + 1]
    }

    pub fn is_double_descent(&self, k: usize) -> bool {
        let w = &self.entries;
        (1..self.n()).contains(&k) && w[k - 1] > w[k] && w[k] > w[k + 1]
    }

    pub fn stats(&self) -> WordStats {
        let n = self.n();
        let asc = self.asc();
        WordStats {
            asc,
            des: n - asc,
            double_ascents: (1..n).filter(|&k| self.is_double_ascent(k)).collect(),
            double_descents: (1..n).filter(|&k| self.is_double_descent(k)).collect(),
        }
    }

    /// Moves the letter at the double descent `k` leftwards, in front of the
    /// nearest position `l < k` with `w_{l-1} < w_k`. Defined only when
    /// `w_l > w_k`; the result has one more ascent.
    pub fn left_match(&self, k: usize) -> Result<Option<Self>> {
        if !self.is_double_descent(k) {
            return Err(Error::NotDoubleDescent(k));
        }
        let w = &self.entries;
        let wk = w[k];
        // w_0 = 0 < w_k, so the search succeeds
        let l = (1..k).rev().find(|&l| w[l - 1] < wk).unwrap();
        if w[l] <= wk {
            return Ok(None);
        }
        let mut out = w.clone();
        out[l] = wk;
        out[l + 1..=k].copy_from_slice(&w[l..k]);
        Ok(Some(Self {
            entries: out,
            r: self.r,
        }))
    }

    /// Moves the letter at the double ascent `k` rightwards, behind the
    /// nearest position `l > k` with `w_{l+1} < w_k`. Defined only when
    /// `w_k < w_l`; the result has one ascent fewer.
    pub fn right_match(&self, k: usize) -> Result<Option<Self>> {
        if !self.is_double_ascent(k) {
            return Err(Error::NotDoubleAscent(k));
        }
        let w = &self.entries;
        let wk = w[k];
        // w_n = 0 < w_k, so the search succeeds
        let l = (k + 1..self.n()).find(|&l| w[l + 1] < wk).unwrap();
        if w[l] <= wk {
            return Ok(None);
        }
        let mut out = w.clone();
        out[k..l].copy_from_slice(&w[k + 1..=l]);
        out[l] = wk;
        Ok(Some(Self {
            entries: out,
            r: self.r,
        }))
    }

    /// All words reachable by a single left or right match.
    pub fn matches(&self) -> Vec<Self> {
        (1..self.n())
            .filter_map(|k| {
                if self.is_double_descent(k) {
                    self.left_match(k).unwrap()
                } else if self.is_double_ascent(k) {
                    self.right_match(k).unwrap()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Number of indices at which a left or right match is defined.
    pub fn match_count(&self) -> usize {
        self.matches().len()
    }

    pub fn has_right_match(&self) -> bool {
        (1..self.n())
            .filter(|&k| self.is_double_ascent(k))
            .any(|k| self.right_match(k).unwrap().is_some())
    }

    /// Every double ascent `k` is closed off by a double descent `l > k` with
    /// `w_l = w_k` and no smaller letter strictly between them.
    pub fn is_canonical(&self) -> bool {
        is_canonical_entries(&self.entries)
    }
}

fn ascents(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

fn is_canonical_entries(w: &[u32]) -> bool {
    let n = w.len() - 1;
    (1..n)
        .filter(|&k| w[k - 1] < w[k] && w[k] < w[k + 1])
        .all(|k| {
            (k + 1..n).any(|l| {
                w[l] == w[k]
                    && w[l - 1] > w[l]
                    && w[l] > w[l + 1]
                    && w[k + 1..l].iter().all(|&x| w[k] <= x)
            })
        })
}

impl fmt::Display for SmirnovWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for SmirnovWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `0,2,1,0` or `(0,2,1,0)`; the alphabet size defaults to one more
/// than the largest letter.
impl FromStr for SmirnovWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let r = entries.iter().max().map_or(1, |m| m + 1);
        Self::new(entries, r)
    }
}

fn check_params(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 1 and r >= 1, got n = {n}, r = {r}"
        )));
    }
    if r > u32::MAX as usize {
        return Err(Error::InvalidParameter(format!(
            "alphabet size {r} too large"
        )));
    }
    Ok(())
}

/// Calls `visit` on every word of `S(n, r)` in lexicographic order.
pub fn for_each_word(n: usize, r: usize, mut visit: impl FnMut(&[u32])) -> Result<()> {
    check_params(n, r)?;
    fn go(n: usize, r: u32, w: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        let i = w.len();
        if i == n {
            w.push(0);
            visit(w);
            w.pop();
            return;
        }
        let prev = w[i - 1];
        // the letter before the final 0 must be nonzero
        let lo = u32::from(i == n - 1);
        for a in lo..r {
            if a != prev {
                w.push(a);
                go(n, r, w, visit);
                w.pop();
            }
        }
    }
    if n >= 2 {
        let mut w = Vec::with_capacity(n + 1);
        w.push(0);
        go(n, r as u32, &mut w, &mut visit);
    }
    Ok(())
}

/// All of `S(n, r)`, lexicographically.
pub fn enumerate_words(n: usize, r: usize) -> Result<Vec<SmirnovWord>> {
    let mut out = Vec::new();
    for_each_word(n, r, |w| {
        out.push(SmirnovWord {
            entries: w.to_vec(),
            r: r as u32,
        })
    })?;
    Ok(out)
}

fn tally_to_polynomial(counts: &[u64]) -> IntPolynomial {
    IntPolynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

/// `Σ_{w ∈ S(n,r)} x^{asc(w)}`
pub fn local_h_via_words(n: usize, r: usize) -> Result<IntPolynomial> {
    let mut counts = vec![0u64; n + 1];
    for_each_word(n, r, |w| counts[ascents(w)] += 1)?;
    Ok(tally_to_polynomial(&counts))
}

/// `E_r (x + x^2 + ... + x^{r-1})^n`
pub fn local_h_via_operator(n: usize, r: usize) -> Result<IntPolynomial> {
    check_params(n, r)?;
    Ok(IntPolynomial::ones_range(1, r - 1)
        .pow(n as u32)
        .e_operator(r))
}

/// Ascent polynomial of `S(n, r)` from the transfer matrix
/// `M[a][b] = x^{[a < b]}` (`a ≠ b`): the `(0, 0)` entry of `M^n`.
pub fn local_h_via_transfer_matrix(n: usize, r: usize) -> Result<IntPolynomial> {
    check_params(n, r)?;
    let mut state = vec![IntPolynomial::zero(); r];
    state[0] = IntPolynomial::one();
    let x = IntPolynomial::x();
    for _ in 0..n {
        let mut next = vec![IntPolynomial::zero(); r];
        for (a, pa) in state.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            let rising = pa * &x;
            for (b, slot) in next.iter_mut().enumerate() {
                if a < b {
                    *slot = &*slot + &rising;
                } else if a > b {
                    *slot = &*slot + pa;
                }
            }
        }
        state = next;
    }
    Ok(state.swap_remove(0))
}

/// `Σ x^{asc(w)}` over all `w ∈ {0, ..., r-1}^len`, counting an ascent at
/// position 0 when `w_1 > 0` (the convention `w_0 = 0`).
pub fn unrestricted_ascent_polynomial(len: usize, r: usize) -> Result<IntPolynomial> {
    if r == 0 {
        return Err(Error::InvalidParameter("need r >= 1".into()));
    }
    fn go(left: usize, r: u32, prev: u32, asc: usize, counts: &mut [u64]) {
        if left == 0 {
            counts[asc] += 1;
            return;
        }
        for a in 0..r {
            go(left - 1, r, a, asc + usize::from(prev < a), counts);
        }
    }
    let mut counts = vec![0u64; len + 1];
    go(len, r as u32, 0, 0, &mut counts);
    Ok(tally_to_polynomial(&counts))
}

/// The h-polynomial of `esd_r(2^V)` as an ascent polynomial over
/// `{0, ..., r-1}^{n-1}`.
pub fn h_via_words(n: usize, r: usize) -> Result<IntPolynomial> {
    check_params(n, r)?;
    unrestricted_ascent_polynomial(n - 1, r)
}

/// Checks `Σ_m C(n + rm, n) x^m = A_{n,r}(x) / (1-x)^{n+1}` through `x^order`,
/// where `A_{n,r}` is [`unrestricted_ascent_polynomial`]`(n, r)`.
pub fn binomial_series_check(n: usize, r: usize, order: usize) -> Result<bool> {
    let lhs = IntSeries::from_fn(order, |m| {
        binomial(BigInt::from(n + r * m), BigInt::from(n))
    });
    let numerator = IntSeries::from_polynomial(&unrestricted_ascent_polynomial(n, r)?, order);
    let denominator = IntPolynomial::from_i64s(&[1, -1]).pow(n as u32 + 1);
    lhs.compare(&numerator.div_polynomial(&denominator)?)
}

/// An equivalence class of `S(n, r)` under left and right matches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopClass {
    /// Sorted.
    pub members: Vec<SmirnovWord>,
    /// The unique member without a right match.
    pub canonical: SmirnovWord,
    /// Match count of the canonical member.
    pub m: usize,
}

impl HopClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `Σ_{u in class} x^{asc(u)}`
    pub fn polynomial(&self) -> IntPolynomial {
        let n = self.canonical.n();
        let mut counts = vec![0u64; n + 1];
        for w in &self.members {
            counts[w.asc()] += 1;
        }
        tally_to_polynomial(&counts)
    }

    /// `x^{asc(c)} (1+x)^{m}` for the canonical member `c`.
    pub fn closed_form(&self) -> IntPolynomial {
        IntPolynomial::from_i64s(&[1, 1])
            .pow(self.m as u32)
            .shift(self.canonical.asc())
    }
}

/// Closure of `{w}` under all matches.
pub fn hop_class(w: &SmirnovWord) -> Result<HopClass> {
    let mut seen: BTreeSet<SmirnovWord> = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for v in u.matches() {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let members: Vec<SmirnovWord> = seen.into_iter().collect();
    let mut roots = members.iter().filter(|u| !u.has_right_match());
    let (Some(canonical), None) = (roots.next(), roots.next()) else {
        return Err(Error::Invariant(format!(
            "class of {w} does not have exactly one member without a right match"
        )));
    };
    let canonical = canonical.clone();
    let m = canonical.match_count();
    Ok(HopClass {
        members,
        canonical,
        m,
    })
}

/// The partition of `S(n, r)` into hop classes, ordered by smallest member.
pub fn hop_classes(n: usize, r: usize) -> Result<Vec<HopClass>> {
    let mut assigned: BTreeSet<SmirnovWord> = BTreeSet::new();
    let mut classes = Vec::new();
    for w in enumerate_words(n, r)? {
        if assigned.contains(&w) {
            continue;
        }
        let class = hop_class(&w)?;
        assigned.extend(class.members.iter().cloned());
        classes.push(class);
    }
    Ok(classes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiMethod {
    /// Count canonical words by number of ascents.
    Words,
    /// Expand the operator form of the local h-polynomial in the gamma basis.
    GammaExpand,
}

/// `ξ_{n,r,i}` for `0 <= i <= n/2`.
pub fn xi_coefficients(n: usize, r: usize, method: XiMethod) -> Result<IntGammaVector> {
    match method {
        XiMethod::GammaExpand => local_h_via_operator(n, r)?.gamma_expand(n),
        XiMethod::Words => {
            let mut counts = vec![0u64; n / 2 + 1];
            let mut overflow = None;
            for_each_word(n, r, |w| {
                if is_canonical_entries(w) {
                    match counts.get_mut(ascents(w)) {
                        Some(c) => *c += 1,
                        None => overflow = Some(w.to_vec()),
                    }
                }
            })?;
            if let Some(w) = overflow {
                return Err(Error::Invariant(format!(
                    "canonical word {w:?} has more than n/2 ascents"
                )));
            }
            Ok(IntGammaVector {
                n,
                xi: counts.into_iter().map(BigInt::from).collect(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn w(e: &[u32], r: u32) -> SmirnovWord {
        SmirnovWord::new(e.to_vec(), r).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn word_validation() {
        assert!(SmirnovWord::new(vec![0, 1, 1, 0], 3).is_err());
        assert!(SmirnovWord::new(vec![1, 0], 3).is_err());
        assert!(SmirnovWord::new(vec![0, 3, 0], 3).is_err());
        assert!(SmirnovWord::new(vec![0], 3).is_err());
        assert_eq!(
            "(0,2,1,0)".parse::<SmirnovWord>().unwrap(),
            w(&[0, 2, 1, 0], 3)
        );
        assert!("0,x,0".parse::<SmirnovWord>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert!(enumerate_words(1, 5).unwrap().is_empty());
        let ws = enumerate_words(2, 4).unwrap();
        assert_eq!(
            ws,
            vec![w(&[0, 1, 0], 4), w(&[0, 2, 0], 4), w(&[0, 3, 0], 4)]
        );
        let ws = enumerate_words(3, 4).unwrap();
        assert_eq!(ws.len(), 6);
        let mut dist = BTreeMap::new();
        for u in &ws {
            *dist.entry(u.asc()).or_insert(0) += 1;
        }
        assert_eq!(dist, BTreeMap::from([(1, 3), (2, 3)]));
        assert!(enumerate_words(0, 3).is_err());
    }

    /// Brute force over all of `{0..r-1}^{n+1}`.
    fn words_by_filtering(n: usize, r: usize) -> Vec<SmirnovWord> {
        let total = r.pow(n as u32 + 1);
        let mut out: Vec<SmirnovWord> = (0..total)
            .filter_map(|mut code| {
                let mut e = vec![0u32; n + 1];
                for slot in e.iter_mut().rev() {
                    *slot = (code % r) as u32;
                    code /= r;
                }
                SmirnovWord::new(e, r as u32).ok()
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_filtering() {
        for n in 1..=6 {
            for r in 1..=4 {
                assert_eq!(
                    enumerate_words(n, r).unwrap(),
                    words_by_filtering(n, r),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn stats_invariants() {
        for n in 1..=7 {
            for u in enumerate_words(n, 4).unwrap() {
                let s = u.stats();
                assert_eq!(s.asc + s.des, n);
                assert!(s.asc >= 1 && s.des >= 1);
            }
        }
    }

    #[test]
    fn local_h_routes() {
        assert_eq!(local_h_via_words(3, 4).unwrap(), p(&[0, 3, 3]));
        assert_eq!(local_h_via_operator(3, 4).unwrap(), p(&[0, 3, 3]));
        for r in 1..7 {
            assert_eq!(local_h_via_words(2, r).unwrap(), p(&[0, r as i64 - 1]));
        }
        assert_eq!(local_h_via_words(4, 2).unwrap(), p(&[0, 0, 1]));
        for n in 1..6 {
            assert!(local_h_via_operator(n, 1).unwrap().is_zero());
        }
        assert_eq!(local_h_via_operator(5, 3).unwrap(), p(&[0, 0, 5, 5]));
        let inner = IntPolynomial::ones_range(1, 2).pow(5);
        assert_eq!(inner, p(&[0, 0, 0, 0, 0, 1, 5, 10, 10, 5, 1]));
    }

    #[test]
    fn transfer_matrix_agrees_with_enumeration() {
        for n in 1..=9 {
            for r in 1..=5 {
                assert_eq!(
                    local_h_via_transfer_matrix(n, r).unwrap(),
                    local_h_via_words(n, r).unwrap(),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn h_via_words_examples() {
        assert_eq!(h_via_words(3, 4).unwrap(), p(&[1, 12, 3]));
        for r in 1..6 {
            assert_eq!(h_via_words(1, r).unwrap(), p(&[1]));
        }
        assert_eq!(h_via_words(2, 3).unwrap(), p(&[1, 2]));
    }

    #[test]
    fn binomial_series_examples() {
        assert!(binomial_series_check(1, 2, 5).unwrap());
        assert!(binomial_series_check(2, 3, 6).unwrap());
        assert!(binomial_series_check(3, 2, 6).unwrap());
        // (1+x)/(1-x)^2 = Σ (2m+1) x^m
        let s = IntSeries::from_polynomial(&unrestricted_ascent_polynomial(1, 2).unwrap(), 5)
            .div_polynomial(&p(&[1, -2, 1]))
            .unwrap();
        assert!(s
            .compare(&IntSeries::from_fn(5, |m| BigInt::from(2 * m + 1)))
            .unwrap());
    }

    #[test]
    fn matches_on_the_worked_example() {
        let u = w(&[0, 2, 1, 2, 1, 0, 1, 2, 1, 0], 3);
        assert!(u.is_double_descent(4));
        let left = u.left_match(4).unwrap().unwrap();
        assert_eq!(left, w(&[0, 1, 2, 1, 2, 0, 1, 2, 1, 0], 3));
        assert_eq!(left.asc(), u.asc() + 1);
        assert!(left.is_double_ascent(1));
        assert_eq!(left.right_match(1).unwrap(), Some(u.clone()));
        assert_eq!(u.match_count(), 1);

        let class = hop_class(&u).unwrap();
        assert_eq!(class.len(), 2);
        assert_eq!(class.canonical, u);
        assert_eq!(class.polynomial(), p(&[0, 0, 0, 0, 1, 1]));
        assert_eq!(class.polynomial(), class.closed_form());
    }

    #[test]
    fn single_moves() {
        assert_eq!(
            w(&[0, 2, 1, 0], 3).left_match(2).unwrap(),
            Some(w(&[0, 1, 2, 0], 3))
        );
        let moved = w(&[0, 1, 2, 3, 0], 4).right_match(1).unwrap().unwrap();
        assert_eq!(moved, w(&[0, 2, 3, 1, 0], 4));
        assert_eq!(moved.asc(), 2);
        // w_l = w_k: no match
        assert_eq!(w(&[0, 1, 2, 1, 0], 3).right_match(1).unwrap(), None);
        assert_eq!(
            w(&[0, 2, 1, 0], 3).left_match(1),
            Err(Error::NotDoubleDescent(1))
        );
        assert_eq!(
            w(&[0, 2, 1, 0], 3).right_match(2),
            Err(Error::NotDoubleAscent(2))
        );
    }

    #[test]
    fn canonical_examples() {
        assert!(w(&[0, 2, 1, 0], 3).is_canonical());
        assert!(w(&[0, 1, 2, 1, 0], 3).is_canonical());
        assert!(!w(&[0, 1, 2, 0], 3).is_canonical());
        let single = hop_class(&w(&[0, 1, 0], 2)).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single.polynomial(), p(&[0, 1]));
    }

    #[test]
    fn canonical_iff_no_right_match() {
        for n in 1..=8 {
            for r in 1..=4 {
                for u in enumerate_words(n, r).unwrap() {
                    assert_eq!(u.is_canonical(), !u.has_right_match(), "{u}");
                }
            }
        }
    }

    #[test]
    fn matches_are_involutive() {
        for n in 1..=8 {
            for u in enumerate_words(n, 4).unwrap() {
                for k in 1..n {
                    if u.is_double_descent(k) {
                        if let Some(v) = u.left_match(k).unwrap() {
                            assert_eq!(v.asc(), u.asc() + 1);
                            let back = (1..n)
                                .filter(|&j| v.is_double_ascent(j))
                                .any(|j| v.right_match(j).unwrap() == Some(u.clone()));
                            assert!(back, "{u} -> {v}");
                        }
                    }
                    if u.is_double_ascent(k) {
                        if let Some(v) = u.right_match(k).unwrap() {
                            assert_eq!(v.asc() + 1, u.asc());
                            let back = (1..n)
                                .filter(|&j| v.is_double_descent(j))
                                .any(|j| v.left_match(j).unwrap() == Some(u.clone()));
                            assert!(back, "{u} -> {v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classes_of_s53() {
        let classes = hop_classes(5, 3).unwrap();
        let total: IntPolynomial = classes.iter().map(HopClass::polynomial).sum();
        assert_eq!(total, p(&[0, 0, 5, 5]));
        let size: usize = classes.iter().map(HopClass::len).sum();
        assert_eq!(size, enumerate_words(5, 3).unwrap().len());
        for c in &classes {
            assert_eq!(c.len(), 1 << c.m);
            assert_eq!(c.m, 5 - 2 * c.canonical.asc());
        }
    }

    #[test]
    fn xi_examples() {
        let both = |n, r| {
            let a = xi_coefficients(n, r, XiMethod::Words).unwrap();
            let b = xi_coefficients(n, r, XiMethod::GammaExpand).unwrap();
            assert_eq!(a, b, "n={n} r={r}");
            a.xi.iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(both(3, 4), vec![0, 3]);
        assert_eq!(both(4, 2), vec![0, 0, 1]);
        for n in 1..6 {
            assert!(both(n, 1).iter().all(|&c| c == 0));
        }
        // the three descending words (0,a,b,0) with a > b
        let canon: Vec<_> = enumerate_words(3, 4)
            .unwrap()
            .into_iter()
            .filter(SmirnovWord::is_canonical)
            .collect();
        assert_eq!(
            canon,
            vec![
                w(&[0, 2, 1, 0], 4),
                w(&[0, 3, 1, 0], 4),
                w(&[0, 3, 2, 0], 4)
            ]
        );
    }
}
