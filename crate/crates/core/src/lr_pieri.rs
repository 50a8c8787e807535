//! The code-walk Littlewood-Richardson rule and the Pieri rules.
//!
//! A product `s_mu s_nu` expands over walks `mu = mu^0, mu^1, ..., mu^l`
//! (`l` the number of parts of `nu`) on codes: step i moves U's rightward by
//! a total of `nu_i` UR -> RU switches, no U passing the starting position of
//! the U to its right, and the switch counts satisfy the lattice condition
//! `k(i,j) <= k(i-1,j-1)` where `k(i,j)` counts the step-i switches made by
//! the j rightmost U's. Each walk corresponds to one semistandard tableau of
//! shape `mu^l/mu` and weight `nu` whose reverse-row word is a lattice word.
//!
//! The enumeration works per step over the boxes each row gains (the j-th U
//! from the right moving past an R adds one box to row j) rather than by
//! literal letter switching; the switch log is reconstructed from the row
//! counts, bottom row first, as the letter-level process would perform them.

use crate::code::Code;
use crate::expansion::SchurExpansion;
use crate::partition::{is_horizontal_strip, is_vertical_strip, Partition};

/// One walk on codes from `mu` to an endpoint, with the switch log that
/// ties the walk to its tableau.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CodeWalk {
    steps: Vec<Code>,
    switch_log: Vec<Vec<usize>>,
}

impl CodeWalk {
    /// The codes `mu^0, mu^1, ..., mu^l`.
    pub fn steps(&self) -> &[Code] {
        &self.steps
    }

    /// The walk as partitions.
    pub fn partitions(&self) -> Vec<Partition> {
        self.steps.iter().map(|c| c.to_partition()).collect()
    }

    /// For each step, the list of U's (1-based, counted from the right, i.e.
    /// row indices) that performed the UR -> RU switches, in the order the
    /// letter-level process makes them.
    pub fn switch_log(&self) -> &[Vec<usize>] {
        &self.switch_log
    }

    pub fn endpoint(&self) -> Partition {
        self.steps
            .last()
            .expect("walks are nonempty")
            .to_partition()
    }

    /// The tableau the walk corresponds to: entry i in each box added during
    /// step i. Rows of the endpoint shape, with 0 marking the boxes of the
    /// starting shape.
    pub fn tableau(&self) -> Vec<Vec<u32>> {
        let shapes = self.partitions();
        let start = &shapes[0];
        let end = shapes.last().unwrap();
        let mut rows: Vec<Vec<u32>> = (1..=end.len())
            .map(|r| vec![0; end.part(r) as usize])
            .collect();
        for (step, pair) in shapes.windows(2).enumerate() {
            let (before, after) = (&pair[0], &pair[1]);
            for r in 1..=after.len() {
                for c in before.part(r)..after.part(r) {
                    rows[r - 1][c as usize] = step as u32 + 1;
                }
            }
        }
        // Boxes of the starting shape stay 0.
        debug_assert!(rows
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().take(start.part(r + 1) as usize).all(|&e| e == 0)));
        rows
    }
}

/// Distributions of `quota` boxes over the rows of `current` that add a
/// horizontal strip, optionally staying inside `target`, and optionally
/// dominated by the previous step's counts (the lattice condition).
fn step_distributions(
    current: &[u32],
    quota: u32,
    prev: Option<&[u32]>,
    target: Option<&Partition>,
) -> Vec<Vec<u32>> {
    struct Search<'a> {
        current: &'a [u32],
        prev: Option<&'a [u32]>,
        target: Option<&'a Partition>,
        rows: usize,
        counts: Vec<u32>,
        out: Vec<Vec<u32>>,
    }

    impl Search<'_> {
        fn go(&mut self, row: usize, remaining: u32, sum_so_far: u32) {
            if row > self.rows {
                if remaining == 0 {
                    self.out.push(self.counts.clone());
                }
                return;
            }
            let old = self.current.get(row - 1).copied().unwrap_or(0);
            // Horizontal strip: the new row r may not pass the old row r-1.
            let strip_cap = if row == 1 {
                remaining
            } else {
                self.current[row - 2] - old
            };
            let mut cap = strip_cap.min(remaining);
            if let Some(t) = self.target {
                cap = cap.min(t.part(row).saturating_sub(old));
            }
            // Lattice condition: boxes in rows 1..=row may not exceed the
            // previous step's boxes in rows 1..row.
            if let Some(p) = self.prev {
                let prefix: u32 = p.iter().take(row - 1).sum();
                cap = cap.min(prefix.saturating_sub(sum_so_far));
            }
            let mut c = cap;
            loop {
                self.counts[row - 1] = c;
                self.go(row + 1, remaining - c, sum_so_far + c);
                if c == 0 {
                    break;
                }
                c -= 1;
            }
            self.counts[row - 1] = 0;
        }
    }

    let rows = current.len() + 1;
    let mut search = Search {
        current,
        prev,
        target,
        rows,
        counts: vec![0u32; rows],
        out: Vec::new(),
    };
    search.go(1, quota, 0);
    search.out
}

fn apply_counts(current: &[u32], counts: &[u32]) -> Vec<u32> {
    let mut next: Vec<u32> = counts
        .iter()
        .enumerate()
        .map(|(r, &c)| current.get(r).copied().unwrap_or(0) + c)
        .collect();
    while next.last() == Some(&0) {
        next.pop();
    }
    next
}

/// The switch log of one step: row indices, one per switch, bottom row first
/// as the letter-level process performs them.
fn log_from_counts(counts: &[u32]) -> Vec<usize> {
    let mut log = Vec::new();
    for r in (1..=counts.len()).rev() {
        for _ in 0..counts[r - 1] {
            log.push(r);
        }
    }
    log
}

fn enumerate_walks(mu: &Partition, nu: &Partition, target: Option<&Partition>) -> Vec<CodeWalk> {
    if let Some(t) = target {
        if t.weight() != mu.weight() + nu.weight() || !t.contains(mu) {
            return Vec::new();
        }
    }
    let mut walks = Vec::new();
    let mut shapes: Vec<Vec<u32>> = vec![mu.parts().to_vec()];
    let mut logs: Vec<Vec<usize>> = Vec::new();

    fn go(
        step: usize,
        nu: &Partition,
        target: Option<&Partition>,
        shapes: &mut Vec<Vec<u32>>,
        logs: &mut Vec<Vec<usize>>,
        walks: &mut Vec<CodeWalk>,
    ) {
        if step > nu.len() {
            let steps = shapes
                .iter()
                .map(|parts| Partition::from_decreasing(parts.clone()).code())
                .collect();
            walks.push(CodeWalk {
                steps,
                switch_log: logs.clone(),
            });
            return;
        }
        let current = shapes.last().unwrap().clone();
        let prev_counts: Option<Vec<u32>> = if step >= 2 {
            let before = &shapes[step - 2];
            let after = &shapes[step - 1];
            Some(
                (0..after.len())
                    .map(|r| after[r] - before.get(r).copied().unwrap_or(0))
                    .collect(),
            )
        } else {
            None
        };
        for counts in step_distributions(&current, nu.part(step), prev_counts.as_deref(), target) {
            shapes.push(apply_counts(&current, &counts));
            logs.push(log_from_counts(&counts));
            go(step + 1, nu, target, shapes, logs, walks);
            shapes.pop();
            logs.pop();
        }
    }

    go(1, nu, target, &mut shapes, &mut logs, &mut walks);
    walks
}

/// All walks from `mu` with row quotas `nu`; the multiset of endpoints is the
/// Schur expansion of `s_mu s_nu`.
pub fn lr_walks(mu: &Partition, nu: &Partition) -> Vec<CodeWalk> {
    enumerate_walks(mu, nu, None)
}

/// The Littlewood-Richardson coefficient: the number of walks from `mu` with
/// quotas `nu` ending at `lambda`. Zero on weight mismatch.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    enumerate_walks(mu, nu, Some(lambda)).len() as u64
}

/// The product `s_mu s_nu` as an integer Schur expansion.
pub fn schur_product(mu: &Partition, nu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for walk in enumerate_walks(mu, nu, None) {
        out.add_term(walk.endpoint(), 1);
    }
    out
}

/// The partitions obtained from `mu` by adding a horizontal `n`-strip, in
/// lexicographically decreasing order.
pub fn pieri_row(mu: &Partition, n: u32) -> Vec<Partition> {
    assert!(n >= 1, "strip size must be positive");
    let mut out: Vec<Partition> = step_distributions(mu.parts(), n, None, None)
        .into_iter()
        .map(|counts| Partition::from_decreasing(apply_counts(mu.parts(), &counts)))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "multiplicity one");
    debug_assert!(out.iter().all(|lam| is_horizontal_strip(lam, mu, n)));
    out
}

/// The partitions obtained from `mu` by adding a vertical `n`-strip, in
/// lexicographically decreasing order.
pub fn pieri_col(mu: &Partition, n: u32) -> Vec<Partition> {
    assert!(n >= 1, "strip size must be positive");
    // A vertical strip can open up to n new rows of width one.
    let rows = mu.len() + n as usize;
    let mut out = Vec::new();
    let mut added = vec![0u32; rows];

    fn go(
        row: usize,
        rows: usize,
        remaining: u32,
        mu: &Partition,
        added: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            let parts: Vec<u32> = (1..=rows).map(|r| mu.part(r) + added[r - 1]).collect();
            out.push(Partition::from_decreasing(parts));
            return;
        }
        if row > rows {
            return;
        }
        // At most one box per row; the grown row may not pass the row above.
        let above = if row == 1 {
            u32::MAX
        } else {
            mu.part(row - 1) + added[row - 2]
        };
        if mu.part(row) < above {
            added[row - 1] = 1;
            go(row + 1, rows, remaining - 1, mu, added, out);
            added[row - 1] = 0;
        }
        go(row + 1, rows, remaining, mu, added, out);
    }

    go(1, rows, n, mu, &mut added, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    debug_assert!(out.iter().all(|lam| is_vertical_strip(lam, mu, n)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_products() {
        let one = Partition::empty();
        assert_eq!(
            schur_product(&one, &p(&[3])),
            SchurExpansion::single(p(&[3]), 1)
        );
        let walks = lr_walks(&one, &p(&[3]));
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].endpoint(), p(&[3]));
        assert_eq!(
            schur_product(&p(&[2, 1]), &one),
            SchurExpansion::single(p(&[2, 1]), 1)
        );
    }

    #[test]
    fn square_of_single_box() {
        let walks = lr_walks(&p(&[1]), &p(&[1]));
        let mut ends: Vec<Partition> = walks.iter().map(|w| w.endpoint()).collect();
        ends.sort();
        assert_eq!(ends, vec![p(&[1, 1]), p(&[2])]);
        let mut expected = SchurExpansion::zero();
        expected.add_term(p(&[2]), 1);
        expected.add_term(p(&[1, 1]), 1);
        assert_eq!(schur_product(&p(&[1]), &p(&[1])), expected);
    }

    #[test]
    fn worked_walk_appears() {
        // The walk RURU -> RUURRRU -> RURRURU -> RRURURU for mu=2,1, nu=3,2,1.
        let walks = lr_walks(&p(&[2, 1]), &p(&[3, 2, 1]));
        let wanted: Vec<String> = ["RURU", "RUURRRU", "RURRURU", "RRURURU"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert!(walks
            .iter()
            .any(|w| { w.steps().iter().map(|c| c.to_string()).collect::<Vec<_>>() == wanted }));
    }

    #[test]
    fn worked_coefficient() {
        assert_eq!(
            lr_coefficient(&p(&[2, 1]), &p(&[3, 2, 1]), &p(&[4, 3, 2])),
            2
        );
        assert_eq!(
            lr_coefficient(&Partition::empty(), &p(&[3, 1]), &p(&[3, 1])),
            1
        );
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        assert_eq!(
            schur_product(&p(&[2, 1]), &p(&[3, 2, 1])).coefficient(&p(&[4, 3, 2])),
            2
        );
    }

    #[test]
    fn walk_tableau_for_worked_example() {
        let walks = lr_walks(&p(&[2, 1]), &p(&[3, 2, 1]));
        let walk = walks
            .iter()
            .find(|w| {
                w.partitions() == vec![p(&[2, 1]), p(&[4, 1, 1]), p(&[4, 3, 1]), p(&[4, 3, 2])]
            })
            .expect("worked walk present");
        assert_eq!(
            walk.tableau(),
            vec![vec![0, 0, 1, 1], vec![0, 2, 2], vec![1, 3]]
        );
        assert_eq!(walk.switch_log(), &[vec![3, 1, 1], vec![2, 2], vec![3]]);
    }

    #[test]
    fn product_is_commutative_on_small_range() {
        for wa in 0..=3 {
            for wb in 0..=3 {
                for mu in Partition::all_of_weight(wa) {
                    for nu in Partition::all_of_weight(wb) {
                        assert_eq!(
                            schur_product(&mu, &nu),
                            schur_product(&nu, &mu),
                            "mu={mu}, nu={nu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_row_examples() {
        assert_eq!(pieri_row(&p(&[1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(pieri_row(&Partition::empty(), 3), vec![p(&[3])]);
        // (3,3) is absent: its two new boxes would stack in column 3.
        assert_eq!(
            pieri_row(&p(&[2, 2]), 2),
            vec![p(&[4, 2]), p(&[3, 2, 1]), p(&[2, 2, 2])]
        );
        assert_eq!(
            pieri_row(&p(&[2]), 2),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
    }

    #[test]
    fn pieri_col_examples() {
        assert_eq!(pieri_col(&p(&[1]), 2), vec![p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(pieri_col(&Partition::empty(), 2), vec![p(&[1, 1])]);
        assert_eq!(pieri_col(&p(&[2]), 1), vec![p(&[3]), p(&[2, 1])]);
    }

    #[test]
    fn pieri_matches_strip_enumeration() {
        for w in 0..=7 {
            for mu in Partition::all_of_weight(w) {
                for n in 1..=4u32 {
                    let total = mu.weight() + n;
                    let rows: Vec<Partition> = Partition::all_of_weight(total)
                        .into_iter()
                        .filter(|lam| is_horizontal_strip(lam, &mu, n))
                        .collect();
                    let mut got = pieri_row(&mu, n);
                    got.sort_unstable_by(|a, b| b.cmp(a));
                    let mut want = rows;
                    want.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(got, want, "row strips for mu={mu}, n={n}");

                    let cols: Vec<Partition> = Partition::all_of_weight(total)
                        .into_iter()
                        .filter(|lam| is_vertical_strip(lam, &mu, n))
                        .collect();
                    let mut got = pieri_col(&mu, n);
                    got.sort_unstable_by(|a, b| b.cmp(a));
                    let mut want = cols;
                    want.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(got, want, "column strips for mu={mu}, n={n}");
                }
            }
        }
    }

    #[test]
    fn pieri_agrees_with_walks() {
        for w in 0..=6 {
            for mu in Partition::all_of_weight(w) {
                for n in 1..=3u32 {
                    let row_nu = p(&[n]);
                    let product = schur_product(&mu, &row_nu);
                    assert!(product.terms().all(|(_, c)| c == 1));
                    assert_eq!(product.support_desc(), pieri_row(&mu, n), "mu={mu}, n={n}");

                    let col_nu = Partition::from_decreasing(vec![1; n as usize]);
                    let product = schur_product(&mu, &col_nu);
                    assert!(product.terms().all(|(_, c)| c == 1));
                    assert_eq!(product.support_desc(), pieri_col(&mu, n), "mu={mu}, n={n}");
                }
            }
        }
    }

    #[test]
    fn associativity_up_to_weight_seven() {
        fn multiply_right(f: &SchurExpansion, rhs: &Partition) -> SchurExpansion {
            let mut out = SchurExpansion::zero();
            for (lam, coeff) in f.terms() {
                for (end, c) in schur_product(lam, rhs).terms() {
                    out.add_term(end.clone(), coeff * c);
                }
            }
            out
        }
        fn multiply_left(lhs: &Partition, f: &SchurExpansion) -> SchurExpansion {
            let mut out = SchurExpansion::zero();
            for (lam, coeff) in f.terms() {
                for (end, c) in schur_product(lhs, lam).terms() {
                    out.add_term(end.clone(), coeff * c);
                }
            }
            out
        }
        for total in 0..=7u32 {
            for wa in 0..=total {
                for wb in 0..=(total - wa) {
                    let wc = total - wa - wb;
                    for a in Partition::all_of_weight(wa) {
                        for b in Partition::all_of_weight(wb) {
                            for c in Partition::all_of_weight(wc) {
                                let left = multiply_right(&schur_product(&a, &b), &c);
                                let right = multiply_left(&a, &schur_product(&b, &c));
                                assert_eq!(left, right, "({a})({b})({c})");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn walk_count_equals_coefficient_sum() {
        for wa in 0..=4 {
            for wb in 0..=4 {
                for mu in Partition::all_of_weight(wa) {
                    for nu in Partition::all_of_weight(wb) {
                        let walks = lr_walks(&mu, &nu);
                        let product = schur_product(&mu, &nu);
                        let total: i64 = product.terms().map(|(_, c)| c).sum();
                        assert_eq!(walks.len() as i64, total);
                        for lam in product.support_desc() {
                            assert_eq!(
                                lr_coefficient(&mu, &nu, &lam),
                                product.coefficient(&lam) as u64
                            );
                        }
                    }
                }
            }
        }
    }
}
