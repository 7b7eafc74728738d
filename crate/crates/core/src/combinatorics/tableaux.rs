use super::partition::{dominance_leq, Partition};

/// Kostka number `K_{shape, content}`: the number of semistandard Young
/// tableaux of the given shape and content, by exhaustive enumeration.
pub fn kostka(shape: &Partition, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    if !dominance_leq(content, shape).expect("equal sizes") {
        return 0;
    }
    let mut remaining: Vec<usize> = content.parts().to_vec();
    let mut filler = Filler::new(shape);
    filler.count(0, &mut remaining)
}

struct Filler {
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
}

impl Filler {
    fn new(shape: &Partition) -> Self {
        let rows = shape.parts();
        let cells = rows.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
        let grid = rows.iter().map(|&len| vec![0; len]).collect();
        Filler { cells, grid }
    }

    fn count(&mut self, idx: usize, remaining: &mut [usize]) -> u64 {
        let Some(&(i, j)) = self.cells.get(idx) else {
            return 1;
        };
        // Entries are 1-based labels; label v uses remaining[v - 1].
        let min_left = if j > 0 { self.grid[i][j - 1] } else { 1 };
        let min_above = if i > 0 { self.grid[i - 1][j] + 1 } else { 1 };
        let lo = min_left.max(min_above).max(i + 1);
        let mut total = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            self.grid[i][j] = v;
            total += self.count(idx + 1, remaining);
            remaining[v - 1] += 1;
        }
        self.grid[i][j] = 0;
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[2, 2]), &p(&[2, 2])), 1);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])), 0);
        assert_eq!(kostka(&p(&[3]), &p(&[1, 1])), 0);
        assert_eq!(kostka(&Partition::empty(), &Partition::empty()), 1);
    }

    #[test]
    fn kostka_diagonal_and_standard_tableaux() {
        // K_{gamma,(1^d)} counts standard tableaux.
        assert_eq!(kostka(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])), 5);
        assert_eq!(kostka(&p(&[3, 2, 1]), &p(&[1, 1, 1, 1, 1, 1])), 16);
        assert_eq!(kostka(&p(&[4, 2]), &p(&[2, 2, 2])), 3);
        for size in 0..=7 {
            for g in Partition::all(size) {
                assert_eq!(kostka(&g, &g), 1);
            }
        }
    }

    #[test]
    fn sum_of_squares_of_standard_counts() {
        // sum_gamma f_gamma^2 = d!
        for d in 1..=7usize {
            let ones = Partition::column(d);
            let total: u64 = Partition::all(d).iter().map(|g| kostka(g, &ones).pow(2)).sum();
            assert_eq!(total, (1..=d as u64).product::<u64>());
        }
    }
}
