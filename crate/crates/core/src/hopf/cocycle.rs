//! The pentagon for `G`-graded vector spaces twisted by `α: G³ → k^×`.

use super::zoo::GroupTable;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A bracketing of simple objects `V_{g₁} ⊗ … ⊗ V_{g_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn node(a: Tree, b: Tree) -> Tree {
        Tree::Node(Box::new(a), Box::new(b))
    }

    fn degree(&self, g: &GroupTable) -> usize {
        match self {
            Tree::Leaf(x) => *x,
            Tree::Node(a, b) => g.m(a.degree(g), b.degree(g)),
        }
    }
}

/// Which child to descend into before applying the associator.
#[derive(Clone, Copy)]
enum Step {
    Left,
    Right,
}

/// `(A⊗B)⊗C → A⊗(B⊗C)` at the subtree reached by `path`, scaled by
/// `α(|A|, |B|, |C|)`.
fn associate(t: &Tree, path: &[Step], g: &GroupTable, alpha: &dyn Fn(usize, usize, usize) -> Scalar) -> Option<(Tree, Scalar)> {
    match (path.split_first(), t) {
        (None, Tree::Node(ab, c)) => match &**ab {
            Tree::Node(a, b) => {
                let s = alpha(a.degree(g), b.degree(g), c.degree(g));
                Some((Tree::node((**a).clone(), Tree::node((**b).clone(), (**c).clone())), s))
            }
            Tree::Leaf(_) => None,
        },
        (Some((Step::Left, rest)), Tree::Node(l, r)) => associate(l, rest, g, alpha).map(|(l2, s)| (Tree::node(l2, (**r).clone()), s)),
        (Some((Step::Right, rest)), Tree::Node(l, r)) => associate(r, rest, g, alpha).map(|(r2, s)| (Tree::node((**l).clone(), r2), s)),
        _ => None,
    }
}

fn walk(start: &Tree, moves: &[&[Step]], g: &GroupTable, alpha: &dyn Fn(usize, usize, usize) -> Scalar) -> Option<(Tree, Scalar)> {
    let mut t = start.clone();
    let mut s = Scalar::one();
    for m in moves {
        let (t2, c) = associate(&t, m, g, alpha)?;
        t = t2;
        s = &s * &c;
    }
    Some((t, s))
}

/// `alpha[(a*n + b)*n + c] = α(a, b, c)`. True iff both pentagon paths from
/// `((V_a V_b) V_c) V_d` to `V_a (V_b (V_c V_d))` agree for all `a, b, c, d`.
pub fn pentagon_cocycle_check(g: &GroupTable, alpha: &[Scalar]) -> Result<bool> {
    let n = g.order();
    if alpha.len() != n * n * n {
        return Err(Error::Dimension(format!("alpha needs {} values, got {}", n * n * n, alpha.len())));
    }
    if let Some(i) = alpha.iter().position(Scalar::is_zero) {
        return Err(Error::Domain(format!("alpha vanishes at ({}, {}, {})", i / (n * n), (i / n) % n, i % n)));
    }
    let a = |x: usize, y: usize, z: usize| alpha[(x * n + y) * n + z].clone();
    let top: &[Step] = &[];
    let long: [&[Step]; 3] = [&[Step::Left], top, &[Step::Right]];
    let short: [&[Step]; 2] = [top, top];
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let leaf = Tree::Leaf;
                    let start = Tree::node(Tree::node(Tree::node(leaf(w), leaf(x)), leaf(y)), leaf(z));
                    let (t1, s1) = walk(&start, &short, g, &a).expect("valid bracketing");
                    let (t2, s2) = walk(&start, &long, g, &a).expect("valid bracketing");
                    debug_assert_eq!(t1, t2);
                    if s1 != s2 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, f: impl Fn(usize, usize, usize) -> i64) -> Vec<Scalar> {
        let mut v = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    v.push(Scalar::int(f(a, b, c)));
                }
            }
        }
        v
    }

    #[test]
    fn known_values() {
        let z2 = GroupTable::cyclic(2);
        assert!(pentagon_cocycle_check(&z2, &table(2, |_, _, _| 1)).unwrap());
        assert!(pentagon_cocycle_check(&z2, &table(2, |a, b, c| if a + b + c == 3 { -1 } else { 1 })).unwrap());
        assert!(!pentagon_cocycle_check(&z2, &table(2, |a, b, c| if a + b + c == 0 { -1 } else { 1 })).unwrap());
        let s3 = GroupTable::symmetric3();
        assert!(pentagon_cocycle_check(&s3, &table(6, |_, _, _| 1)).unwrap());
    }

    #[test]
    fn errors() {
        let z2 = GroupTable::cyclic(2);
        assert!(matches!(pentagon_cocycle_check(&z2, &table(2, |a, _, _| a as i64)), Err(Error::Domain(_))));
        assert!(matches!(pentagon_cocycle_check(&z2, &[Scalar::one()]), Err(Error::Dimension(_))));
    }

    #[test]
    fn agrees_with_direct_identity_on_z2() {
        let z2 = GroupTable::cyclic(2);
        for mask in 0u32..256 {
            let alpha: Vec<Scalar> = (0..8).map(|i| Scalar::int(if mask >> i & 1 == 1 { -1 } else { 1 })).collect();
            let at = |a: usize, b: usize, c: usize| alpha[a * 4 + b * 2 + c].clone();
            let mut direct = true;
            for g in 0..2 {
                for h in 0..2 {
                    for k in 0..2 {
                        for l in 0..2 {
                            let lhs = &(&at(h, k, l) * &at(g, (h + k) % 2, l)) * &at(g, h, k);
                            let rhs = &at((g + h) % 2, k, l) * &at(g, h, (k + l) % 2);
                            direct &= lhs == rhs;
                        }
                    }
                }
            }
            assert_eq!(pentagon_cocycle_check(&z2, &alpha).unwrap(), direct, "mask {mask}");
        }
    }
}
