use super::{Resolution, SteinerTripleSystem};
use crate::exact_cover::ExactCover;

/// Searches for a resolution by exact cover.
///
/// Items are the blocks plus one `(class, point)` pair for every class and
/// point; option `(T, c)` puts block `T` into class `c`. Class symmetry is
/// broken by sending the `i`-th block through point 1 to class `i`. The search
/// is complete, so `None` means the system is not resolvable.
pub fn find_resolution(sts: &SteinerTripleSystem) -> Option<Resolution> {
    let n = sts.order() as usize;
    if n % 6 != 3 {
        return None;
    }
    let b = sts.block_count();
    let classes = (n - 1) / 2;
    let mut x = ExactCover::new(b + classes * n);
    let mut option_of = Vec::new();
    for (t, tr) in sts.blocks().iter().enumerate() {
        for c in 0..classes {
            let mut items = vec![t];
            items.extend(tr.0.iter().map(|&p| b + c * n + (p as usize - 1)));
            let id = x.add_option(&items);
            option_of.push((t, c));
            debug_assert_eq!(option_of.len(), id + 1);
        }
    }
    for (c, &t) in sts.pencil(1).iter().enumerate() {
        if !x.force_option(t * classes + c) {
            return None;
        }
    }
    let chosen = x.first_solution()?;
    let mut res = Resolution { classes: vec![Vec::new(); classes] };
    for (c, &t) in sts.pencil(1).iter().enumerate() {
        res.classes[c].push(t);
    }
    for id in chosen {
        let (t, c) = option_of[id];
        res.classes[c].push(t);
    }
    for class in &mut res.classes {
        class.sort_unstable();
    }
    Some(res)
}

/// A single parallel class (a set of disjoint blocks covering every point), if any.
pub fn find_parallel_class(sts: &SteinerTripleSystem) -> Option<Vec<usize>> {
    let n = sts.order() as usize;
    if !n.is_multiple_of(3) {
        return None;
    }
    let mut x = ExactCover::new(n);
    for t in sts.blocks() {
        let items: Vec<usize> = t.0.iter().map(|&p| p as usize - 1).collect();
        x.add_option(&items);
    }
    x.first_solution()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{bose, hamming_sts};

    #[test]
    fn affine_nine_is_resolvable() {
        let s = bose(3).unwrap();
        let r = find_resolution(&s).unwrap();
        assert_eq!(r.classes.len(), 4);
        r.check(&s).unwrap();
    }

    #[test]
    fn fano_has_no_resolution() {
        assert!(find_resolution(&hamming_sts(3).unwrap()).is_none());
        assert!(find_parallel_class(&hamming_sts(3).unwrap()).is_none());
    }

    #[test]
    fn kirkman_fifteen() {
        let s = hamming_sts(4).unwrap();
        let r = find_resolution(&s).unwrap();
        assert_eq!(r.classes.len(), 7);
        r.check(&s).unwrap();
    }
}
