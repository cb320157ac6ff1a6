use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{multiple_points, MultiplePoint, ProjArrangement};

/// A partition of `cA` into `k` classes with base points `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct Multinet {
    pub k: usize,
    /// Sorted line indices of each class.
    pub classes: Vec<Vec<usize>>,
    pub base_points: Vec<MultiplePoint>,
}

impl Multinet {
    /// Class label of every line.
    pub fn labels(&self, lines: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; lines];
        for (c, class) in self.classes.iter().enumerate() {
            for &i in class {
                out[i] = c;
            }
        }
        out
    }
}

/// The multinet axiom that failed first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Equal class sizes.
    EqualSizes,
    /// Lines from different classes meet in `X`.
    CrossingsInBase,
    /// Each base point meets every class equally often.
    BalancedBase,
    /// Each class is connected through intersections outside `X`.
    Connected,
}

impl core::fmt::Display for Axiom {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Axiom::EqualSizes => "(i) equal class sizes",
            Axiom::CrossingsInBase => "(ii) cross-class intersections lie in X",
            Axiom::BalancedBase => "(iii) constant class count at each base point",
            Axiom::Connected => "(iv) classes connected outside X",
        })
    }
}

fn point_of(points: &[MultiplePoint], i: usize, j: usize) -> usize {
    points.iter().position(|p| p.contains(i) && p.contains(j)).expect("every pair of lines meets")
}

/// Checks the four axioms exactly. `Ok(None)` means the candidate is a
/// multinet.
pub fn verify_multinet(arr: &ProjArrangement, candidate: &Multinet) -> Result<Option<Axiom>> {
    let n = arr.len();
    if candidate.k < 3 || candidate.classes.len() != candidate.k {
        return Err(Error::MalformedPartition(format!(
            "expected k >= 3 classes, got k = {} with {} classes",
            candidate.k,
            candidate.classes.len()
        )));
    }
    let mut seen = vec![false; n];
    for &i in candidate.classes.iter().flatten() {
        if i >= n || seen[i] {
            return Err(Error::MalformedPartition(format!("line {i} is out of range or repeated")));
        }
        seen[i] = true;
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::MalformedPartition(format!("line {i} is in no class")));
    }

    let points = multiple_points(arr);
    let mut in_base = vec![false; points.len()];
    for b in &candidate.base_points {
        let pos = points.iter().position(|p| p.incident == b.incident);
        match pos {
            Some(q) if points[q].multiplicity() >= 3 => in_base[q] = true,
            _ => {
                return Err(Error::MalformedPartition(format!(
                    "base point on lines {:?} is not a multiple point",
                    b.incident
                )))
            }
        }
    }
    let labels = candidate.labels(n);

    let size = candidate.classes[0].len();
    if candidate.classes.iter().any(|c| c.len() != size) {
        return Ok(Some(Axiom::EqualSizes));
    }
    for i in 0..n {
        for j in i + 1..n {
            if labels[i] != labels[j] && !in_base[point_of(&points, i, j)] {
                return Ok(Some(Axiom::CrossingsInBase));
            }
        }
    }
    for (q, p) in points.iter().enumerate() {
        if !in_base[q] {
            continue;
        }
        let mut counts = vec![0usize; candidate.k];
        for &i in &p.incident {
            counts[labels[i]] += 1;
        }
        if counts.iter().any(|&c| c != counts[0]) {
            return Ok(Some(Axiom::BalancedBase));
        }
    }
    for class in &candidate.classes {
        let mut reached = vec![false; class.len()];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(a) = stack.pop() {
            for b in 0..class.len() {
                if !reached[b] && !in_base[point_of(&points, class[a], class[b])] {
                    reached[b] = true;
                    stack.push(b);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Ok(Some(Axiom::Connected));
        }
    }
    Ok(None)
}

/// Result of a bounded multinet search.
#[derive(Debug, Clone)]
pub struct MultinetSearch {
    pub found: Vec<Multinet>,
    /// True when every class assignment was examined.
    pub exhaustive: bool,
    pub nodes: u64,
}

/// Node budget used when none is given: unlimited up to 13 lines.
pub fn default_budget(lines: usize) -> Option<u64> {
    if lines <= 13 {
        None
    } else {
        Some(2_000_000)
    }
}

struct Search<'a> {
    k: usize,
    n: usize,
    points: &'a [MultiplePoint],
    /// Groups of lines forced into one class by double points.
    groups: Vec<Vec<usize>>,
    labels: Vec<usize>,
    sizes: Vec<usize>,
    budget: Option<u64>,
    nodes: u64,
    truncated: bool,
    found: Vec<Vec<usize>>,
}

const FREE: usize = usize::MAX;

impl Search<'_> {
    /// Whether the partial labelling can still satisfy axioms (ii), (iii).
    fn consistent(&self) -> bool {
        let cap = self.n / self.k;
        if self.sizes.iter().any(|&s| s > cap) {
            return false;
        }
        let mut counts = vec![0usize; self.k];
        for p in self.points {
            counts.iter_mut().for_each(|c| *c = 0);
            for &i in &p.incident {
                if self.labels[i] != FREE {
                    counts[self.labels[i]] += 1;
                }
            }
            let used = counts.iter().filter(|&&c| c > 0).count();
            if used >= 2 {
                let m = p.multiplicity();
                if m % self.k != 0 || counts.iter().any(|&c| c > m / self.k) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, g: usize, used: usize) {
        if self.truncated {
            return;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.truncated = true;
            return;
        }
        if g == self.groups.len() {
            if used == self.k {
                self.found.push(self.labels.clone());
            }
            return;
        }
        // First-appearance labelling: a new class is opened only in order.
        let top = (used + 1).min(self.k);
        for c in 0..top {
            for idx in 0..self.groups[g].len() {
                let i = self.groups[g][idx];
                self.labels[i] = c;
            }
            self.sizes[c] += self.groups[g].len();
            if self.consistent() {
                self.run(g + 1, used.max(c + 1));
            }
            self.sizes[c] -= self.groups[g].len();
            for idx in 0..self.groups[g].len() {
                let i = self.groups[g][idx];
                self.labels[i] = FREE;
            }
        }
    }
}

/// All `k`-multinets up to relabelling of classes, found by backtracking
/// over class assignments with propagation. Lines through a common double
/// point share a class; every multiple point is either single-class or
/// balanced. Candidates are confirmed with [`verify_multinet`].
pub fn search_multinets(arr: &ProjArrangement, k: usize, budget: Option<u64>) -> MultinetSearch {
    let n = arr.len();
    if k < 3 || n % k != 0 {
        return MultinetSearch { found: Vec::new(), exhaustive: true, nodes: 0 };
    }
    let points = multiple_points(arr);

    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for p in points.iter().filter(|p| p.multiplicity() % k != 0) {
        for w in p.incident.windows(2) {
            let (a, b) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = root(&mut parent, i);
        if group_of[r] == usize::MAX {
            group_of[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[group_of[r]].push(i);
    }

    let mut s = Search {
        k,
        n,
        points: &points,
        groups,
        labels: vec![FREE; n],
        sizes: vec![0; k],
        budget,
        nodes: 0,
        truncated: false,
        found: Vec::new(),
    };
    s.run(0, 0);

    let mut found = Vec::new();
    for labels in &s.found {
        let mut classes = vec![Vec::new(); k];
        for (i, &c) in labels.iter().enumerate() {
            classes[c].push(i);
        }
        let base_points = points
            .iter()
            .filter(|p| p.incident.iter().any(|&i| labels[i] != labels[p.incident[0]]))
            .cloned()
            .collect();
        let m = Multinet { k, classes, base_points };
        if let Ok(None) = verify_multinet(arr, &m) {
            found.push(m);
        }
    }
    MultinetSearch { found, exhaustive: !s.truncated, nodes: s.nodes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RealField;
    use crate::geometry::ProjLine;

    fn arr(rows: &[[i64; 3]]) -> ProjArrangement {
        let f = RealField::rational();
        ProjArrangement::new(rows.iter().map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2])).collect()).unwrap()
    }

    fn a3() -> ProjArrangement {
        arr(&[[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1], [1, -1, 0], [0, 0, 1]])
    }

    fn a3_candidate(drop_one: bool) -> Multinet {
        let a = a3();
        let mut base: Vec<MultiplePoint> = multiple_points(&a).into_iter().filter(|p| p.multiplicity() == 3).collect();
        assert_eq!(base.len(), 4);
        if drop_one {
            base.pop();
        }
        // Lines through each double point share a class.
        Multinet { k: 3, classes: vec![vec![0, 3], vec![1, 2], vec![4, 5]], base_points: base }
    }

    #[test]
    fn a3_verification() {
        assert_eq!(verify_multinet(&a3(), &a3_candidate(false)).unwrap(), None);
        assert_eq!(verify_multinet(&a3(), &a3_candidate(true)).unwrap(), Some(Axiom::CrossingsInBase));
        let mut uneven = a3_candidate(false);
        uneven.classes = vec![vec![0], vec![1, 2, 3], vec![4, 5]];
        assert_eq!(verify_multinet(&a3(), &uneven).unwrap(), Some(Axiom::EqualSizes));
        // Parallel pairs as classes: x = 0 and y = 1 meet outside X.
        let mut parallel = a3_candidate(false);
        parallel.classes = vec![vec![0, 1], vec![2, 3], vec![4, 5]];
        assert_eq!(verify_multinet(&a3(), &parallel).unwrap(), Some(Axiom::CrossingsInBase));
        let mut broken = a3_candidate(false);
        broken.classes[0].push(2);
        assert!(matches!(verify_multinet(&a3(), &broken), Err(Error::MalformedPartition(_))));
    }

    #[test]
    fn a3_search() {
        let s = search_multinets(&a3(), 3, None);
        assert!(s.exhaustive);
        assert_eq!(s.found.len(), 1);
        assert_eq!(s.found[0].classes, a3_candidate(false).classes);
        for m in &s.found {
            assert_eq!(verify_multinet(&a3(), m).unwrap(), None);
        }
    }

    #[test]
    fn generic_lines_have_none() {
        let g = arr(&[[1, 0, 0], [0, 1, 0], [1, 1, -1], [1, 2, -3], [2, -1, 5], [0, 0, 1]]);
        let s = search_multinets(&g, 3, None);
        assert!(s.exhaustive && s.found.is_empty());
    }

    #[test]
    fn budget_truncates() {
        let s = search_multinets(&a3(), 3, Some(1));
        assert!(!s.exhaustive);
    }
}
