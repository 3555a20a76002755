//! Strict partial orders on rules and ordered programs.

use std::fmt;

use crate::error::{Error, Result};
use crate::program::{Program, ProgramKind, RuleId, RuleSet};
use crate::rule::Rule;

/// A strict partial order on the rule ids `0..n`, stored transitively
/// closed. `x < y` reads "x is more preferred than y".
#[derive(Clone, PartialEq, Eq)]
pub struct StrictOrder {
    below: Vec<RuleSet>,
    above: Vec<RuleSet>,
}

impl StrictOrder {
    pub fn empty(n: usize) -> StrictOrder {
        StrictOrder {
            below: vec![RuleSet::empty(n); n],
            above: vec![RuleSet::empty(n); n],
        }
    }

    /// Closes `edges` (pairs `(less, greater)`) transitively. On a cycle the
    /// error carries the ids along it, first id repeated at the end.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (RuleId, RuleId)>) -> std::result::Result<StrictOrder, Vec<RuleId>> {
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for (x, y) in edges {
            assert!(x < n && y < n, "order edge ({x}, {y}) outside 0..{n}");
            if x == y {
                return Err(vec![x, x]);
            }
            succ[x].push(y);
            indeg[y] += 1;
        }
        let mut topo = Vec::with_capacity(n);
        let mut ready: Vec<RuleId> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = ready.pop() {
            topo.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        if topo.len() < n {
            return Err(find_cycle(&succ, &indeg));
        }
        let mut order = StrictOrder::empty(n);
        for &v in &topo {
            let mut down = order.below[v].clone();
            down.insert(v);
            for &w in &succ[v] {
                order.below[w].union_with(&down);
            }
        }
        for y in 0..n {
            for x in order.below[y].clone().iter() {
                order.above[x].insert(y);
            }
        }
        Ok(order)
    }

    /// Every rule of an earlier layer is below every rule of a later one.
    pub fn layered(n: usize, layers: &[Vec<RuleId>]) -> StrictOrder {
        let mut edges = Vec::new();
        for w in layers.windows(2) {
            for &x in &w[0] {
                for &y in &w[1] {
                    edges.push((x, y));
                }
            }
        }
        StrictOrder::from_edges(n, edges).expect("layers form a chain")
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    /// `x < y`.
    pub fn less(&self, x: RuleId, y: RuleId) -> bool {
        self.below[y].contains(x)
    }

    /// `{ u | u < y }`.
    pub fn below(&self, y: RuleId) -> &RuleSet {
        &self.below[y]
    }

    /// `{ u | y < u }`.
    pub fn above(&self, y: RuleId) -> &RuleSet {
        &self.above[y]
    }

    /// All pairs `(x, y)` with `x < y`.
    pub fn pairs(&self) -> impl Iterator<Item = (RuleId, RuleId)> + '_ {
        (0..self.len()).flat_map(move |y| self.below[y].iter().map(move |x| (x, y)))
    }

    pub fn pair_count(&self) -> usize {
        self.below.iter().map(RuleSet::len).sum()
    }

    /// The `<`-minimal elements.
    pub fn minimal(&self) -> RuleSet {
        RuleSet::from_ids(self.len(), (0..self.len()).filter(|&y| self.below[y].is_empty()))
    }

    /// `↓X = { u | ∃x ∈ X: u < x }`.
    pub fn down_closure(&self, x: &RuleSet) -> RuleSet {
        let mut d = RuleSet::empty(self.len());
        for v in x.iter() {
            d.union_with(&self.below[v]);
        }
        d
    }

    pub fn is_downward_closed(&self, x: &RuleSet) -> bool {
        self.down_closure(x).is_subset(x)
    }

    /// The same order over `n >= len()` ids plus the `extra` pairs.
    pub fn extend_to(&self, n: usize, extra: impl IntoIterator<Item = (RuleId, RuleId)>) -> std::result::Result<StrictOrder, Vec<RuleId>> {
        assert!(n >= self.len());
        StrictOrder::from_edges(n, self.pairs().chain(extra).collect::<Vec<_>>())
    }
}

fn find_cycle(succ: &[Vec<RuleId>], indeg: &[usize]) -> Vec<RuleId> {
    // a vertex Kahn could not release has an unreleased predecessor, so
    // walking predecessors inside that set must eventually repeat a vertex
    let stuck: Vec<bool> = indeg.iter().map(|&d| d > 0).collect();
    let mut pred = vec![Vec::new(); succ.len()];
    for (v, ws) in succ.iter().enumerate() {
        for &w in ws {
            pred[w].push(v);
        }
    }
    let mut seen = vec![usize::MAX; succ.len()];
    let mut path = Vec::new();
    let mut v = stuck.iter().position(|&s| s).expect("a stuck vertex");
    loop {
        if seen[v] != usize::MAX {
            let mut cycle = path[seen[v]..].to_vec();
            cycle.push(v);
            cycle.reverse();
            return cycle;
        }
        seen[v] = path.len();
        path.push(v);
        v = *pred[v]
            .iter()
            .find(|&&u| stuck[u])
            .expect("stuck vertices keep a stuck predecessor");
    }
}

impl fmt::Debug for StrictOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// Validates an order given by labels. `domain` lists the labels in id order.
pub fn validate_order<S: AsRef<str>>(domain: &[S], edges: &[(S, S)]) -> Result<StrictOrder> {
    let pos = |l: &S| {
        domain
            .iter()
            .position(|d| d.as_ref() == l.as_ref())
            .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
    };
    let mut ids = Vec::with_capacity(edges.len());
    for (x, y) in edges {
        ids.push((pos(x)?, pos(y)?));
    }
    StrictOrder::from_edges(domain.len(), ids).map_err(|cycle| {
        Error::CycleDetected(cycle.iter().map(|&i| domain[i].as_ref().to_string()).collect())
    })
}

/// `↓X` with respect to `o`.
pub fn down_closure(x: &RuleSet, o: &StrictOrder) -> RuleSet {
    o.down_closure(x)
}

/// A program with a strict partial order on its rules.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedProgram {
    program: Program,
    order: StrictOrder,
}

impl OrderedProgram {
    pub fn new(program: Program, order: StrictOrder) -> Result<OrderedProgram> {
        if order.len() != program.len() {
            return Err(Error::OrderMismatch {
                order: order.len(),
                rules: program.len(),
            });
        }
        Ok(OrderedProgram { program, order })
    }

    pub fn unordered(program: Program) -> OrderedProgram {
        let order = StrictOrder::empty(program.len());
        OrderedProgram { program, order }
    }

    /// Order given as `(less, greater)` label pairs.
    pub fn with_label_order(program: Program, edges: &[(&str, &str)]) -> Result<OrderedProgram> {
        let domain: Vec<&str> = program.rules().iter().map(Rule::label).collect();
        let order = validate_order(&domain, edges)?;
        OrderedProgram::new(program, order)
    }

    /// Rules of `layers[0]` are the most preferred; every rule of a layer is
    /// below every rule of the next one.
    pub fn layered(kind: ProgramKind, layers: Vec<Vec<Rule>>) -> Result<OrderedProgram> {
        let mut ids = Vec::with_capacity(layers.len());
        let mut rules = Vec::new();
        for layer in layers {
            let start = rules.len();
            rules.extend(layer);
            ids.push((start..rules.len()).collect::<Vec<_>>());
        }
        let program = Program::new(kind, rules)?;
        let order = StrictOrder::layered(program.len(), &ids);
        OrderedProgram::new(program, order)
    }

    /// Parses layers separated by lines of dashes (`---`), most preferred
    /// layer first; rules are labelled `r1`, `r2`, ... in reading order.
    pub fn parse_layers(kind: ProgramKind, text: &str) -> Result<OrderedProgram> {
        let mut layers = vec![Vec::new()];
        let mut count = 0;
        for line in text.lines() {
            let body = line.split('%').next().unwrap_or("").trim();
            if body.starts_with("---") {
                layers.push(Vec::new());
                continue;
            }
            if body.is_empty() {
                continue;
            }
            count += 1;
            let rule = crate::syntax::parse_rule(format!("r{count}"), body)?;
            layers.last_mut().expect("nonempty").push(rule);
        }
        OrderedProgram::layered(kind, layers)
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn order(&self) -> &StrictOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.program.len()
    }

    pub fn is_empty(&self) -> bool {
        self.program.is_empty()
    }

    pub fn into_parts(self) -> (Program, StrictOrder) {
        (self.program, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn chain_closure() {
        let o = StrictOrder::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(o.less(0, 2));
        assert!(!o.less(2, 0));
        assert_eq!(o.pair_count(), 3);
        assert_eq!(o.minimal().ids(), [0]);
        assert_eq!(o.down_closure(&RuleSet::from_ids(3, [2])).ids(), [0, 1]);
        assert!(o.down_closure(&RuleSet::empty(3)).is_empty());
    }

    #[test]
    fn cycles_are_reported() {
        let err = validate_order(&["x", "y"], &[("x", "y"), ("y", "x")]).unwrap_err();
        match err {
            Error::CycleDetected(c) => {
                assert_eq!(c.first(), c.last());
                assert_eq!(c.len(), 3);
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(
            validate_order(&["x"], &[("x", "x")]),
            Err(Error::CycleDetected(_))
        ));
        assert!(matches!(
            validate_order(&["x"], &[("x", "z")]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn empty_order_is_valid() {
        let o = validate_order::<&str>(&["a", "b"], &[]).unwrap();
        assert_eq!(o.pair_count(), 0);
        assert_eq!(o.minimal().len(), 2);
    }

    #[test]
    fn layers_relate_everything_across() {
        // System < NormalOperation < FaultModel with 1, 2 and 2 rules
        let o = StrictOrder::layered(5, &[vec![0], vec![1, 2], vec![3, 4]]);
        assert_eq!(o.pair_count(), 2 + 2 + 4);
    }

    fn dag() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (1usize..10).prop_flat_map(|n| {
            let edges = proptest::collection::vec((0..n, 0..n), 0..20).prop_map(|es| {
                es.into_iter()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect::<Vec<_>>()
            });
            (Just(n), edges)
        })
    }

    proptest! {
        #[test]
        fn closure_is_a_strict_order((n, edges) in dag()) {
            let o = StrictOrder::from_edges(n, edges.clone()).unwrap();
            for x in 0..n {
                prop_assert!(!o.less(x, x));
                for y in 0..n {
                    if o.less(x, y) {
                        prop_assert!(!o.less(y, x));
                        for z in 0..n {
                            if o.less(y, z) {
                                prop_assert!(o.less(x, z));
                            }
                        }
                    }
                }
            }
            for (a, b) in edges {
                prop_assert!(o.less(a, b));
            }
        }

        #[test]
        fn down_closure_is_closed((n, edges) in dag(), bits in proptest::collection::vec(any::<bool>(), 10)) {
            let o = StrictOrder::from_edges(n, edges).unwrap();
            let x = RuleSet::from_ids(n, (0..n).filter(|&i| bits[i]));
            // recompute by the definition
            let direct = RuleSet::from_ids(n, (0..n).filter(|&u| x.iter().any(|v| o.less(u, v))));
            prop_assert_eq!(&o.down_closure(&x), &direct);
            let closed = o.down_closure(&x).union(&x);
            prop_assert!(o.down_closure(&closed).is_subset(&closed));
        }
    }
}
