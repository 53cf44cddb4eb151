//! Knuth's Algorithm X with dancing links.
//!
//! Items are `0..item_count`; every option lists the items it covers. The
//! search always branches on the item with the fewest remaining options
//! (ties to the lowest index) and tries options in insertion order, so
//! solutions come out in a deterministic order.

pub struct ExactCover {
    // node arrays; nodes 0..=items are the header list (0 is the root)
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
    items: usize,
    options: usize,
}

impl ExactCover {
    pub fn new(items: usize) -> Self {
        let mut left = Vec::with_capacity(items + 1);
        let mut right = Vec::with_capacity(items + 1);
        for i in 0..=items {
            left.push(if i == 0 { items } else { i - 1 });
            right.push(if i == items { 0 } else { i + 1 });
        }
        let up: Vec<usize> = (0..=items).collect();
        let down = up.clone();
        ExactCover {
            left,
            right,
            up,
            down,
            col: (0..=items).collect(),
            row: vec![usize::MAX; items + 1],
            size: vec![0; items + 1],
            items,
            options: 0,
        }
    }

    /// Adds an option covering the given (distinct) items; returns its index.
    pub fn add_option(&mut self, items: &[usize]) -> usize {
        let id = self.options;
        self.options += 1;
        let first = self.col.len();
        for (k, &it) in items.iter().enumerate() {
            assert!(it < self.items, "item {it} out of range");
            let c = it + 1;
            let node = self.col.len();
            self.col.push(c);
            self.row.push(id);
            self.up.push(self.up[c]);
            self.down.push(c);
            let u = self.up[c];
            self.down[u] = node;
            self.up[c] = node;
            self.size[c] += 1;
            self.left.push(if k == 0 { node } else { node - 1 });
            self.right.push(first);
            if k > 0 {
                self.right[node - 1] = node;
                self.left[first] = node;
            }
        }
        id
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                self.size[self.col[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Covers the items of an option up front, forcing it into every solution.
    /// Returns `false` if one of its items was already covered.
    pub fn force_option(&mut self, option: usize) -> bool {
        let Some(node) = (self.items + 1..self.col.len()).find(|&x| self.row[x] == option) else {
            return false;
        };
        let mut cols = vec![self.col[node]];
        let mut j = self.right[node];
        while j != node {
            cols.push(self.col[j]);
            j = self.right[j];
        }
        for c in cols {
            // an item is still in the header list iff its neighbours point at it
            if self.right[self.left[c]] != c {
                return false;
            }
            self.cover(c);
        }
        true
    }

    /// Visits solutions in search order until `visit` returns `false`.
    pub fn search(&mut self, mut visit: impl FnMut(&[usize]) -> bool) {
        let mut partial = Vec::new();
        self.recurse(&mut partial, &mut visit);
    }

    fn recurse(&mut self, partial: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.right[0] == 0 {
            return visit(partial);
        }
        let mut best = self.right[0];
        let mut c = self.right[best];
        while c != 0 {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.size[best] == 0 {
            return true;
        }
        self.cover(best);
        let mut r = self.down[best];
        let mut keep_going = true;
        while r != best && keep_going {
            partial.push(self.row[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.col[j]);
                j = self.right[j];
            }
            keep_going = self.recurse(partial, visit);
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.col[j]);
                j = self.left[j];
            }
            partial.pop();
            r = self.down[r];
        }
        self.uncover(best);
        keep_going
    }

    pub fn first_solution(&mut self) -> Option<Vec<usize>> {
        let mut found = None;
        self.search(|s| {
            let mut v = s.to_vec();
            v.sort_unstable();
            found = Some(v);
            false
        });
        found
    }

    pub fn count_solutions(&mut self) -> usize {
        let mut n = 0;
        self.search(|_| {
            n += 1;
            true
        });
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knuth_example() {
        // Knuth's 7-item example has exactly one cover: options 0, 3, 4
        let mut x = ExactCover::new(7);
        for o in [&[2, 4][..], &[0, 3, 6], &[1, 2, 5], &[0, 3, 5], &[1, 6], &[3, 4, 6]] {
            x.add_option(o);
        }
        assert_eq!(x.first_solution(), Some(vec![0, 3, 4]));
        assert_eq!(x.count_solutions(), 1);
    }

    #[test]
    fn count_perfect_matchings_of_k4() {
        let mut x = ExactCover::new(4);
        for a in 0..4 {
            for b in a + 1..4 {
                x.add_option(&[a, b]);
            }
        }
        assert_eq!(x.count_solutions(), 3);
    }

    #[test]
    fn forcing() {
        let mut x = ExactCover::new(4);
        let ids: Vec<usize> = [[0, 1], [2, 3], [0, 2], [1, 3]].iter().map(|o| x.add_option(o)).collect();
        assert!(x.force_option(ids[2]));
        assert!(!x.force_option(ids[0]));
        assert_eq!(x.count_solutions(), 1);
    }
}
