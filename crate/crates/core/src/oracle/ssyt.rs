//! The tableau side of the Littlewood-Richardson rule: exhaustive
//! enumeration of semistandard fillings of a skew shape whose reverse-row
//! reading word is a lattice word. Used as the independent count the
//! code-walk rule is checked against.

use crate::partition::Partition;

/// True if every prefix of `word` contains at least as many `i`s as `i+1`s.
fn is_lattice_word(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; max + 1];
    for &x in word {
        let x = x as usize;
        counts[x] += 1;
        if x >= 2 && counts[x] > counts[x - 1] {
            return false;
        }
    }
    true
}

/// The number of semistandard fillings of `lambda/mu` with weight `nu` whose
/// reverse-row word (rows read right to left, top to bottom) is a lattice
/// word. Zero when the weights mismatch or `mu` does not fit inside `lambda`.
pub fn ssyt_lr(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) {
        return 0;
    }
    // Skew cells in row-major order: (row, column), both 1-based.
    let mut cells = Vec::new();
    for row in 1..=lambda.len() {
        for col in mu.part(row) + 1..=lambda.part(row) {
            cells.push((row, col));
        }
    }
    if cells.is_empty() {
        return 1; // weight matching already forces nu to be empty
    }
    let entries_max = nu.len() as u32;
    let mut remaining: Vec<u32> = (1..=nu.len()).map(|i| nu.part(i)).collect();
    let mut filling: Vec<Vec<u32>> = (1..=lambda.len())
        .map(|row| vec![0; lambda.part(row) as usize])
        .collect();

    fn count(
        index: usize,
        cells: &[(usize, u32)],
        mu: &Partition,
        entries_max: u32,
        remaining: &mut Vec<u32>,
        filling: &mut Vec<Vec<u32>>,
    ) -> u64 {
        if index == cells.len() {
            let word: Vec<u32> = filling
                .iter()
                .enumerate()
                .flat_map(|(row, entries)| {
                    entries
                        .iter()
                        .rev()
                        .take((entries.len() as u32 - mu.part(row + 1)) as usize)
                        .copied()
                })
                .collect();
            return if is_lattice_word(&word) { 1 } else { 0 };
        }
        let (row, col) = cells[index];
        let mut total = 0;
        for entry in 1..=entries_max {
            if remaining[entry as usize - 1] == 0 {
                continue;
            }
            // Rows weakly increase left to right.
            if col > mu.part(row) + 1 && filling[row - 1][col as usize - 2] > entry {
                continue;
            }
            // Columns strictly increase top to bottom, among skew cells.
            if row > 1 && col > mu.part(row - 1) && col <= filling[row - 2].len() as u32 {
                let above = filling[row - 2][col as usize - 1];
                if above >= entry {
                    continue;
                }
            }
            remaining[entry as usize - 1] -= 1;
            filling[row - 1][col as usize - 1] = entry;
            total += count(index + 1, cells, mu, entries_max, remaining, filling);
            filling[row - 1][col as usize - 1] = 0;
            remaining[entry as usize - 1] += 1;
        }
        total
    }

    count(0, &cells, mu, entries_max, &mut remaining, &mut filling)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lattice_word_checks() {
        assert!(is_lattice_word(&[1, 1, 2, 1, 3, 2]));
        assert!(!is_lattice_word(&[2, 1, 1]));
        assert!(is_lattice_word(&[]));
        assert!(!is_lattice_word(&[1, 2, 2]));
    }

    #[test]
    fn worked_example_count() {
        assert_eq!(ssyt_lr(&p(&[2, 1]), &p(&[3, 2, 1]), &p(&[4, 3, 2])), 2);
    }

    #[test]
    fn straight_shapes_have_unique_filling() {
        for w in 0..=7 {
            for lam in Partition::all_of_weight(w) {
                assert_eq!(ssyt_lr(&Partition::empty(), &lam, &lam), 1, "lambda={lam}");
            }
        }
    }

    #[test]
    fn single_boxes() {
        assert_eq!(ssyt_lr(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(ssyt_lr(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(ssyt_lr(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn weight_and_containment_guards() {
        assert_eq!(ssyt_lr(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
        assert_eq!(ssyt_lr(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])), 1);
    }
}
