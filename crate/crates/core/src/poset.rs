//! Finite posets on `0..d`, their ideals, antichains and rank structure.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Default upper bound on the number of ideals or antichains an enumeration
/// may produce before giving up.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// A finite poset on the elements `0..d`.
///
/// The order relation is stored as inclusive down-sets and up-sets per
/// element. `covers` is always the transitive reduction, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    d: usize,
    covers: Vec<(usize, usize)>,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Builds the poset generated by `relations`, where `(i, j)` means
    /// `i < j`. Redundant pairs are dropped: the stored covers are the
    /// transitive reduction of the closure.
    pub fn new(d: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if d == 0 {
            return Err(Error::EmptyPoset);
        }
        if d > MAX_ELEMENTS {
            return Err(Error::CapacityExceeded(d));
        }
        let mut succ = vec![ElementSet::EMPTY; d];
        for &(i, j) in relations {
            for index in [i, j] {
                if index >= d {
                    return Err(Error::IndexOutOfRange { index, d });
                }
            }
            if i == j {
                return Err(Error::NotPartialOrder(i));
            }
            succ[i].insert(j);
        }

        // Kahn's algorithm; anything left over sits on a cycle.
        let mut indegree = vec![0usize; d];
        for s in &succ {
            for j in s.iter() {
                indegree[j] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..d).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(d);
        while let Some(i) = queue.pop() {
            topo.push(i);
            for j in succ[i].iter() {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push(j);
                }
            }
        }
        if topo.len() < d {
            let stuck = (0..d).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(Error::NotPartialOrder(stuck));
        }

        let mut down: Vec<ElementSet> = (0..d).map(ElementSet::singleton).collect();
        for &i in &topo {
            let below = down[i];
            for j in succ[i].iter() {
                down[j] = down[j].union(below);
            }
        }
        let mut up = vec![ElementSet::EMPTY; d];
        for (j, dj) in down.iter().enumerate() {
            for i in dj.iter() {
                up[i].insert(j);
            }
        }

        let mut covers = Vec::new();
        for (i, &up_i) in up.iter().enumerate() {
            let strict_up_i = up_i.difference(ElementSet::singleton(i));
            for j in strict_up_i.iter() {
                let strict_down_j = down[j].difference(ElementSet::singleton(j));
                if strict_up_i.is_disjoint(strict_down_j) {
                    covers.push((i, j));
                }
            }
        }

        Ok(Poset {
            d,
            covers,
            down,
            up,
            labels: None,
        })
    }

    /// Attaches display names, one per element.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.d {
            return Err(Error::Precondition(format!(
                "expected {} labels, got {}",
                self.d,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// The antichain on `d` elements.
    pub fn antichain(d: usize) -> Result<Self> {
        Self::new(d, &[])
    }

    /// The chain `0 < 1 < .. < d-1`.
    pub fn chain(d: usize) -> Result<Self> {
        let rel: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
        Self::new(d, &rel)
    }

    /// Ordinal sum of antichains of the given sizes, bottom level first.
    ///
    /// Elements are numbered level by level. Every maximal ranked poset is
    /// isomorphic to one of these.
    pub fn ordinal_sum_of_antichains(level_sizes: &[usize]) -> Result<Self> {
        if level_sizes.is_empty() {
            return Err(Error::InvalidComposition("no levels given".into()));
        }
        if let Some(pos) = level_sizes.iter().position(|&c| c == 0) {
            return Err(Error::InvalidComposition(format!("level {pos} has size 0")));
        }
        let d: usize = level_sizes.iter().sum();
        if d > MAX_ELEMENTS {
            return Err(Error::CapacityExceeded(d));
        }
        let mut rel = Vec::new();
        let mut start = 0;
        for w in level_sizes.windows(2) {
            let next = start + w[0];
            for i in start..next {
                for j in next..next + w[1] {
                    rel.push((i, j));
                }
            }
            start = next;
        }
        Self::new(d, &rel)
    }

    /// A random poset: a random DAG along a shuffled linear order, each
    /// forward pair related with probability `edge_probability`, then closed
    /// transitively. Deterministic in `seed`.
    pub fn random(d: usize, edge_probability: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&edge_probability) {
            return Err(Error::Precondition(format!(
                "edge probability {edge_probability} not in [0, 1]"
            )));
        }
        if d > MAX_ELEMENTS {
            return Err(Error::CapacityExceeded(d));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..d).collect();
        order.shuffle(&mut rng);
        let mut rel = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                if rng.gen_bool(edge_probability) {
                    rel.push((order[a], order[b]));
                }
            }
        }
        Self::new(d, &rel)
    }

    pub fn len(&self) -> usize {
        self.d
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cover pairs `(i, j)`, meaning `j` covers `i`, in ascending order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if present, otherwise its index.
    pub fn name(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.d)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j].contains(i)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{x : x ≤ i}`.
    #[inline]
    pub fn down_set(&self, i: usize) -> ElementSet {
        self.down[i]
    }

    /// `{x : x ≥ i}`.
    #[inline]
    pub fn up_set(&self, i: usize) -> ElementSet {
        self.up[i]
    }

    /// Elements comparable to `i`, excluding `i` itself.
    #[inline]
    pub fn comparable_to(&self, i: usize) -> ElementSet {
        self.down[i]
            .union(self.up[i])
            .difference(ElementSet::singleton(i))
    }

    /// All pairs `(i, j)` with `i ≤ j`, including the diagonal.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.d)
            .flat_map(|j| self.down[j].iter().map(move |i| (i, j)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn comparability_graph(&self) -> ComparabilityGraph {
        ComparabilityGraph {
            adjacency: (0..self.d).map(|i| self.comparable_to(i)).collect(),
        }
    }

    /// Whether `s` is nonempty and induces a connected subgraph of the
    /// comparability graph. The empty set is not connected.
    pub fn is_connected(&self, s: ElementSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = ElementSet::singleton(start);
        let mut frontier = seen;
        while let Some(x) = frontier.first() {
            frontier.remove(x);
            let fresh = self.comparable_to(x).intersection(s).difference(seen);
            seen = seen.union(fresh);
            frontier = frontier.union(fresh);
        }
        seen == s
    }

    pub fn is_ideal(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.down[x].is_subset(s))
    }

    pub fn is_antichain(&self, s: ElementSet) -> bool {
        s.iter().all(|x| self.comparable_to(x).is_disjoint(s))
    }

    /// Elements of `s` with nothing above them in `s`.
    pub fn maximal_elements(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .filter(|&x| self.up[x].intersection(s) == ElementSet::singleton(x))
            .collect()
    }

    /// Elements of `s` with nothing below them in `s`.
    pub fn minimal_elements(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .filter(|&x| self.down[x].intersection(s) == ElementSet::singleton(x))
            .collect()
    }

    /// `max(I)` for an ideal `I`.
    pub fn max_of_ideal(&self, ideal: ElementSet) -> Result<ElementSet> {
        self.check_subset(ideal)?;
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition(format!("{ideal} is not an ideal")));
        }
        Ok(self.maximal_elements(ideal))
    }

    /// `⟨A⟩`, the ideal generated by an antichain `A`.
    pub fn ideal_of_antichain(&self, antichain: ElementSet) -> Result<ElementSet> {
        self.check_subset(antichain)?;
        if !self.is_antichain(antichain) {
            return Err(Error::Precondition(format!("{antichain} is not an antichain")));
        }
        Ok(self.down_closure(antichain))
    }

    /// Downward closure of an arbitrary subset.
    pub fn down_closure(&self, s: ElementSet) -> ElementSet {
        s.iter()
            .fold(ElementSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    fn check_subset(&self, s: ElementSet) -> Result<()> {
        if s.is_subset(self.elements()) {
            Ok(())
        } else {
            let index = s.difference(self.elements()).first().unwrap_or(self.d);
            Err(Error::IndexOutOfRange { index, d: self.d })
        }
    }

    /// Elements in a linear extension: every element appears after all
    /// elements below it.
    fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.d).collect();
        order.sort_by_key(|&i| (self.down[i].len(), i));
        order
    }

    pub fn ideals(&self) -> Result<Vec<ElementSet>> {
        self.ideals_capped(DEFAULT_ENUM_CAP)
    }

    /// All ideals, including `∅` and the whole poset, in ascending
    /// canonical order.
    pub fn ideals_capped(&self, cap: usize) -> Result<Vec<ElementSet>> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElementSet::EMPTY)];
        while let Some((k, cur)) = stack.pop() {
            if k == order.len() {
                if out.len() == cap {
                    return Err(Error::EnumerationTooLarge { cap });
                }
                out.push(cur);
                continue;
            }
            let x = order[k];
            stack.push((k + 1, cur));
            if self.down[x].difference(ElementSet::singleton(x)).is_subset(cur) {
                stack.push((k + 1, cur.with(x)));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn antichains(&self) -> Result<Vec<ElementSet>> {
        self.antichains_capped(DEFAULT_ENUM_CAP)
    }

    /// All antichains, including `∅`, in ascending canonical order.
    pub fn antichains_capped(&self, cap: usize) -> Result<Vec<ElementSet>> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, ElementSet::EMPTY)];
        while let Some((k, cur)) = stack.pop() {
            if k == self.d {
                if out.len() == cap {
                    return Err(Error::EnumerationTooLarge { cap });
                }
                out.push(cur);
                continue;
            }
            stack.push((k + 1, cur));
            if self.comparable_to(k).is_disjoint(cur) {
                stack.push((k + 1, cur.with(k)));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0usize; self.d];
        for x in self.linear_extension() {
            height[x] = self
                .covers
                .iter()
                .filter(|&&(_, j)| j == x)
                .map(|&(i, _)| height[i] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Levels `P_0..P_n` of a graded poset.
    ///
    /// Graded means every maximal chain has the same length. With longest-path
    /// heights, that holds exactly when each cover raises the height by one
    /// and every maximal element sits at the top height.
    pub fn rank_levels(&self) -> Result<RankDecomposition> {
        let height = self.heights();
        let rank = height.iter().copied().max().unwrap_or(0);
        if self.covers.iter().any(|&(i, j)| height[j] != height[i] + 1) {
            return Err(Error::NotGraded);
        }
        if self
            .maximal_elements(self.elements())
            .iter()
            .any(|x| height[x] != rank)
        {
            return Err(Error::NotGraded);
        }
        let mut levels = vec![ElementSet::EMPTY; rank + 1];
        for (x, &h) in height.iter().enumerate() {
            levels[h].insert(x);
        }
        Ok(RankDecomposition { levels, height })
    }

    /// Graded, with every pair of elements from distinct levels comparable.
    pub fn is_maximal_ranked(&self) -> bool {
        self.maximal_ranked_levels().is_some()
    }

    /// The rank decomposition when the poset is maximal ranked.
    pub fn maximal_ranked_levels(&self) -> Option<RankDecomposition> {
        let levels = self.rank_levels().ok()?;
        let ok = (0..self.d).all(|x| {
            let same_level = levels.level(levels.level_of(x));
            self.comparable_to(x).union(same_level) == self.elements()
        });
        ok.then_some(levels)
    }

    /// All maximal chains, bottom to top, in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut upper = vec![Vec::new(); self.d];
        for &(i, j) in &self.covers {
            upper[i].push(j);
        }
        let mut out = Vec::new();
        for m in self.minimal_elements(self.elements()).iter() {
            let mut path = vec![m];
            self.extend_chains(&upper, &mut path, &mut out);
        }
        out
    }

    fn extend_chains(&self, upper: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let top = *path.last().expect("path is never empty");
        if upper[top].is_empty() {
            out.push(path.clone());
            return;
        }
        for &next in &upper[top] {
            path.push(next);
            self.extend_chains(upper, path, out);
            path.pop();
        }
    }

    /// Searches for an induced X-poset: distinct `a‖b`, `x‖y` with
    /// `a, b < c < x, y`. Returns the first match in order of `c`, then
    /// `(a, b)`, then `(x, y)`.
    pub fn contains_x_subposet(&self) -> Option<XWitness> {
        (0..self.d).find_map(|c| {
            let below = self.down[c].difference(ElementSet::singleton(c));
            let above = self.up[c].difference(ElementSet::singleton(c));
            let (a, b) = self.first_incomparable_pair(below)?;
            let (x, y) = self.first_incomparable_pair(above)?;
            Some(XWitness { a, b, c, x, y })
        })
    }

    fn first_incomparable_pair(&self, s: ElementSet) -> Option<(usize, usize)> {
        s.iter().find_map(|i| {
            s.difference(self.comparable_to(i))
                .iter()
                .find(|&j| j > i)
                .map(|j| (i, j))
        })
    }

    pub fn is_x_witness(&self, w: &XWitness) -> bool {
        let XWitness { a, b, c, x, y } = *w;
        let distinct: ElementSet = [a, b, c, x, y].into_iter().collect();
        distinct.len() == 5
            && !self.comparable(a, b)
            && !self.comparable(x, y)
            && self.lt(a, c)
            && self.lt(b, c)
            && self.lt(c, x)
            && self.lt(c, y)
    }
}

/// Undirected comparability graph, as an adjacency bitset per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparabilityGraph {
    adjacency: Vec<ElementSet>,
}

impl ComparabilityGraph {
    pub fn neighbors(&self, i: usize) -> ElementSet {
        self.adjacency[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(j)
    }

    /// Edges `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.iter().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }
}

/// Levels `P_0..P_n` of a graded poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDecomposition {
    levels: Vec<ElementSet>,
    height: Vec<usize>,
}

impl RankDecomposition {
    /// The rank `n`; there are `n + 1` levels.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[ElementSet] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> ElementSet {
        self.levels[i]
    }

    pub fn level_of(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    /// The common level of every member of `s`, if there is one.
    pub fn common_level(&self, s: ElementSet) -> Option<usize> {
        let first = self.level_of(s.first()?);
        s.iter().all(|x| self.level_of(x) == first).then_some(first)
    }

    /// X-poset detection from level sizes alone, valid for maximal ranked
    /// posets: some level `s ≥ 2` and some level `s' ≤ s - 2` both have at
    /// least two elements.
    pub fn x_witness(&self) -> Option<XWitness> {
        let n = self.rank();
        for s in 2..=n {
            if self.levels[s].len() < 2 {
                continue;
            }
            for low in 0..=s - 2 {
                if self.levels[low].len() < 2 {
                    continue;
                }
                let mut lo = self.levels[low].iter();
                let mut hi = self.levels[s].iter();
                return Some(XWitness {
                    a: lo.next()?,
                    b: lo.next()?,
                    c: self.levels[s - 1].first()?,
                    x: hi.next()?,
                    y: hi.next()?,
                });
            }
        }
        None
    }
}

/// Five elements forming an X-poset: `a‖b`, `x‖y`, `a, b < c < x, y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct XWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub x: usize,
    pub y: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    /// a=0, b=1, c=2, d=3, e=4.
    fn x_poset() -> Poset {
        Poset::new(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn build_closes_transitively() {
        let p = x_poset();
        assert!(p.leq(0, 3));
        assert!(p.leq(1, 4));
        assert!(!p.leq(3, 0));
        assert!(!p.comparable(0, 1));
        assert!(!p.comparable(3, 4));
        assert_eq!(p.covers(), &[(0, 2), (1, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn build_single_point() {
        let p = Poset::new(1, &[]).unwrap();
        assert_eq!(p.order_pairs(), vec![(0, 0)]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Poset::new(2, &[(0, 1), (1, 0)]), Err(Error::NotPartialOrder(0)));
        assert_eq!(Poset::new(2, &[(1, 1)]), Err(Error::NotPartialOrder(1)));
        assert_eq!(
            Poset::new(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, d: 2 })
        );
        assert_eq!(Poset::new(0, &[]), Err(Error::EmptyPoset));
        assert_eq!(Poset::new(65, &[]), Err(Error::CapacityExceeded(65)));
        assert!(Poset::new(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn redundant_relations_are_reduced() {
        let p = Poset::new(3, &[(0, 1), (1, 2), (0, 2), (0, 1)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(p, Poset::chain(3).unwrap());
    }

    #[test]
    fn comparability_graph_of_x_poset() {
        let g = x_poset().comparability_graph();
        assert_eq!(
            g.edges(),
            vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
        );
        assert!(!g.has_edge(0, 1));
        assert!(!g.has_edge(3, 4));
        assert!(Poset::antichain(3).unwrap().comparability_graph().edges().is_empty());
        assert_eq!(Poset::chain(3).unwrap().comparability_graph().edges().len(), 3);
    }

    #[test]
    fn connectivity() {
        let p = x_poset();
        assert!(p.is_connected(set(&[0, 1, 2])));
        assert!(!p.is_connected(set(&[3, 4])));
        assert!(!p.is_connected(ElementSet::EMPTY));
        for i in 0..5 {
            assert!(p.is_connected(ElementSet::singleton(i)));
        }
        assert!(p.is_connected(set(&[0, 1, 3])));
    }

    #[test]
    fn ideals_of_x_poset() {
        let ideals = x_poset().ideals().unwrap();
        let expected = vec![
            set(&[]),
            set(&[0]),
            set(&[1]),
            set(&[0, 1]),
            set(&[0, 1, 2]),
            set(&[0, 1, 2, 3]),
            set(&[0, 1, 2, 4]),
            set(&[0, 1, 2, 3, 4]),
        ];
        assert_eq!(ideals, expected);
    }

    #[test]
    fn antichains_of_x_poset() {
        let antichains = x_poset().antichains().unwrap();
        let mut expected = vec![
            set(&[]),
            set(&[0]),
            set(&[1]),
            set(&[0, 1]),
            set(&[2]),
            set(&[3]),
            set(&[4]),
            set(&[3, 4]),
        ];
        expected.sort();
        assert_eq!(antichains, expected);
    }

    #[test]
    fn ideals_and_antichains_of_small_families() {
        for k in 1..6 {
            let c = Poset::chain(k).unwrap();
            assert_eq!(c.ideals().unwrap().len(), k + 1);
            let a = c.antichains().unwrap();
            assert_eq!(a.len(), k + 1);
            assert!(a.iter().all(|s| s.len() <= 1));
        }
        let a3 = Poset::antichain(3).unwrap();
        assert_eq!(a3.ideals().unwrap().len(), 8);
        assert_eq!(a3.antichains().unwrap().len(), 8);
    }

    #[test]
    fn enumeration_cap() {
        let a = Poset::antichain(10).unwrap();
        assert_eq!(a.ideals_capped(100), Err(Error::EnumerationTooLarge { cap: 100 }));
        assert_eq!(a.antichains_capped(1023), Err(Error::EnumerationTooLarge { cap: 1023 }));
        assert_eq!(a.antichains_capped(1024).unwrap().len(), 1024);
    }

    #[test]
    fn max_and_generated_ideal() {
        let p = x_poset();
        assert_eq!(p.max_of_ideal(set(&[0, 1, 2])).unwrap(), set(&[2]));
        assert_eq!(p.max_of_ideal(ElementSet::EMPTY).unwrap(), ElementSet::EMPTY);
        assert_eq!(p.max_of_ideal(p.elements()).unwrap(), set(&[3, 4]));
        assert_eq!(p.ideal_of_antichain(set(&[3, 4])).unwrap(), p.elements());
        assert_eq!(p.ideal_of_antichain(ElementSet::EMPTY).unwrap(), ElementSet::EMPTY);
        assert_eq!(p.ideal_of_antichain(set(&[2])).unwrap(), set(&[0, 1, 2]));
        assert!(matches!(p.max_of_ideal(set(&[2])), Err(Error::Precondition(_))));
        assert!(matches!(p.ideal_of_antichain(set(&[0, 2])), Err(Error::Precondition(_))));
        assert!(matches!(p.max_of_ideal(set(&[7])), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn rank_levels_of_x_poset() {
        let r = x_poset().rank_levels().unwrap();
        assert_eq!(r.rank(), 2);
        assert_eq!(r.levels(), &[set(&[0, 1]), set(&[2]), set(&[3, 4])]);
    }

    #[test]
    fn ungraded_poset_is_rejected() {
        // a<b<c plus d<c
        let p = Poset::new(4, &[(0, 1), (1, 2), (3, 2)]).unwrap();
        assert_eq!(p.rank_levels(), Err(Error::NotGraded));
        assert!(!p.is_maximal_ranked());
        // a<b plus isolated c: heights fine per cover, but c is maximal at height 0
        let q = Poset::new(3, &[(0, 1)]).unwrap();
        assert_eq!(q.rank_levels(), Err(Error::NotGraded));
    }

    #[test]
    fn antichain_is_rank_zero() {
        let r = Poset::antichain(3).unwrap().rank_levels().unwrap();
        assert_eq!(r.rank(), 0);
        assert_eq!(r.sizes(), vec![3]);
    }

    #[test]
    fn maximal_ranked_examples() {
        assert!(x_poset().is_maximal_ranked());
        let two_chains = Poset::new(4, &[(0, 2), (1, 3)]).unwrap();
        assert!(two_chains.rank_levels().is_ok());
        assert!(!two_chains.is_maximal_ranked());
        assert!(Poset::antichain(4).unwrap().is_maximal_ranked());
    }

    #[test]
    fn ordinal_sums() {
        assert_eq!(Poset::ordinal_sum_of_antichains(&[2, 1, 2]).unwrap(), x_poset());
        assert_eq!(Poset::ordinal_sum_of_antichains(&[1, 1, 1]).unwrap(), Poset::chain(3).unwrap());
        assert_eq!(Poset::ordinal_sum_of_antichains(&[3]).unwrap(), Poset::antichain(3).unwrap());
        assert!(Poset::ordinal_sum_of_antichains(&[]).is_err());
        assert!(Poset::ordinal_sum_of_antichains(&[2, 0, 1]).is_err());
    }

    #[test]
    fn x_detection() {
        let w = x_poset().contains_x_subposet().unwrap();
        assert_eq!(w, XWitness { a: 0, b: 1, c: 2, x: 3, y: 4 });
        for d in 1..=4 {
            for seed in 0..20 {
                assert!(Poset::random(d, 0.5, seed).unwrap().contains_x_subposet().is_none());
            }
        }
        let p = Poset::ordinal_sum_of_antichains(&[2, 1, 1, 2]).unwrap();
        let w = p.contains_x_subposet().unwrap();
        assert!(p.is_x_witness(&w));
        let levels = p.rank_levels().unwrap();
        assert_eq!(levels.level_of(w.x) - levels.level_of(w.a), 3);
    }

    #[test]
    fn maximal_chains_examples() {
        assert_eq!(
            x_poset().maximal_chains(),
            vec![vec![0, 2, 3], vec![0, 2, 4], vec![1, 2, 3], vec![1, 2, 4]]
        );
        assert_eq!(Poset::antichain(3).unwrap().maximal_chains(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(Poset::chain(3).unwrap().maximal_chains(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn random_extremes_and_determinism() {
        let p0 = Poset::random(6, 0.0, 3).unwrap();
        assert_eq!(p0, Poset::antichain(6).unwrap());
        let p1 = Poset::random(6, 1.0, 3).unwrap();
        assert_eq!(p1.maximal_chains().len(), 1);
        assert_eq!(p1.maximal_chains()[0].len(), 6);
        assert_eq!(Poset::random(5, 0.4, 7).unwrap(), Poset::random(5, 0.4, 7).unwrap());
        assert!(Poset::random(5, 1.5, 0).is_err());
    }

    #[test]
    fn labels_must_match_size() {
        let p = x_poset();
        assert!(p.clone().with_labels(vec!["a".into()]).is_err());
        let names: Vec<String> = "abcde".chars().map(String::from).collect();
        let p = p.with_labels(names).unwrap();
        assert_eq!(p.name(2), "c");
    }
}
