use super::{Point, SteinerTripleSystem};

/// `m ≡ 1, 3 (mod 6)`.
pub fn is_admissible_order(m: u32) -> bool {
    matches!(m % 6, 1 | 3)
}

/// All point sets of size `m` that carry a Steiner subsystem, as sorted point lists.
///
/// Backtracks over the points in order, deciding include/exclude, and keeps the
/// included set closed under the third-point map. Orders below 3 and
/// inadmissible orders give an empty list.
pub fn find_subsystems(sts: &SteinerTripleSystem, m: u32) -> Vec<Vec<Point>> {
    let n = sts.order();
    let mut out = Vec::new();
    if m < 3 || m >= n || !is_admissible_order(m) {
        return out;
    }
    let third = sts.third_point_table();
    let mut state = vec![Decision::Open; n as usize + 1];
    search(&third, n, m as usize, 1, &mut state, 0, 0, &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Decision {
    Open,
    In,
    Out,
}

#[allow(clippy::too_many_arguments)]
fn search(
    third: &[Vec<Point>],
    n: Point,
    m: usize,
    next: Point,
    state: &mut Vec<Decision>,
    inside: usize,
    outside: usize,
    out: &mut Vec<Vec<Point>>,
) {
    if inside == m {
        let pts: Vec<Point> = (1..=n).filter(|&p| state[p as usize] == Decision::In).collect();
        out.push(pts);
        return;
    }
    let Some(p) = (next..=n).find(|&p| state[p as usize] == Decision::Open) else { return };
    // include p and close up
    let saved = state.clone();
    if let Some(added) = close_with(third, n, m, inside, p, state) {
        search(third, n, m, p + 1, state, inside + added, outside, out);
    }
    *state = saved;
    // exclude p
    if (n as usize) - outside > m {
        state[p as usize] = Decision::Out;
        search(third, n, m, p + 1, state, inside, outside + 1, out);
        state[p as usize] = Decision::Open;
    }
}

/// Adds `p` and everything it generates; fails if an excluded point is forced
/// in or the set grows past `m`.
fn close_with(
    third: &[Vec<Point>],
    n: Point,
    m: usize,
    inside: usize,
    p: Point,
    state: &mut [Decision],
) -> Option<usize> {
    let mut members: Vec<Point> = (1..=n).filter(|&q| state[q as usize] == Decision::In).collect();
    let mut queue = vec![p];
    let mut added = 0;
    while let Some(x) = queue.pop() {
        match state[x as usize] {
            Decision::In => continue,
            Decision::Out => return None,
            Decision::Open => {}
        }
        state[x as usize] = Decision::In;
        added += 1;
        if inside + added > m {
            return None;
        }
        for &y in &members {
            queue.push(third[x as usize][y as usize]);
        }
        members.push(x);
    }
    Some(added)
}
