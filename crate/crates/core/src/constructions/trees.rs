use super::{ConstructionError, LabeledTree};
use crate::structures::Graph;

pub const BINARY_TREE_CAP: usize = 12;
pub const FOUR_ARM_CAP: usize = 10;
pub const RIGID_FOREST_CAP: usize = 4;
pub const CONNECTED_MODEL_CAP: usize = 8;
pub const TRUNCATED_DEPTH_CAP: usize = 8;

fn check_range(what: &'static str, value: usize, min: usize, cap: usize) -> Result<(), ConstructionError> {
    if value < min {
        return Err(ConstructionError::InvalidParameter(format!("{what} must be at least {min}, got {value}")));
    }
    if value > cap {
        return Err(ConstructionError::CapExceeded { what, value, cap });
    }
    Ok(())
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, edges).expect("constructions emit simple graphs")
}

/// Appends a binary tree of height `h` rooted at `root`; leaves go to `leaves` left to right.
fn grow_binary(h: usize, root: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>, leaves: &mut Vec<usize>) {
    if h == 0 {
        leaves.push(root);
        return;
    }
    for _ in 0..2 {
        let child = *next;
        *next += 1;
        edges.push((root, child));
        grow_binary(h - 1, child, next, edges, leaves);
    }
}

/// Complete binary tree of height `n`: root 0, then the first subtree, then the second.
pub fn binary_tree(n: usize) -> Result<LabeledTree, ConstructionError> {
    check_range("binary tree height", n, 0, BINARY_TREE_CAP)?;
    let (mut edges, mut leaves, mut next) = (Vec::new(), Vec::new(), 1);
    grow_binary(n, 0, &mut next, &mut edges, &mut leaves);
    Ok(LabeledTree { graph: build(next, edges), root: 0, leaves })
}

/// Four binary trees of height `n` whose roots hang off a centre vertex 0.
pub fn four_arm_tree(n: usize) -> Result<LabeledTree, ConstructionError> {
    check_range("four-arm tree height", n, 1, FOUR_ARM_CAP)?;
    let (mut edges, mut leaves, mut next) = (Vec::new(), Vec::new(), 1);
    for _ in 0..4 {
        let root = next;
        next += 1;
        edges.push((0, root));
        grow_binary(n, root, &mut next, &mut edges, &mut leaves);
    }
    Ok(LabeledTree { graph: build(next, edges), root: 0, leaves })
}

/// The path `a_0 ~ a_1 ~ ... ~ a_k` on vertices `0..=k`.
pub fn path_graph(k: usize) -> Result<Graph, ConstructionError> {
    if k < 1 {
        return Err(ConstructionError::InvalidParameter("path length must be at least 1".into()));
    }
    Ok(build(k + 1, (0..k).map(|i| (i, i + 1)).collect()))
}

/// Hangs a path with `len` edges off `at`; returns the far end.
fn hang_path(at: usize, len: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) -> usize {
    let mut prev = at;
    for _ in 0..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
    prev
}

/// `n` copies of [`four_arm_tree`]`(n)`; the k-th leaf (copy-major, depth-first)
/// gets a path with `k` edges attached by its first vertex.
pub fn rigid_forest(n: usize) -> Result<Graph, ConstructionError> {
    check_range("rigid forest index", n, 1, RIGID_FOREST_CAP)?;
    let t = four_arm_tree(n)?;
    let size = t.graph.vertex_count();
    let mut edges = Vec::new();
    let mut leaves = Vec::new();
    for copy in 0..n {
        let off = copy * size;
        edges.extend(t.graph.edges().map(|(u, v)| (u + off, v + off)));
        leaves.extend(t.leaves.iter().map(|&l| l + off));
    }
    let mut next = n * size;
    for (i, &leaf) in leaves.iter().enumerate() {
        let k = i + 1;
        let start = next;
        next += 1;
        edges.push((leaf, start));
        hang_path(start, k, &mut next, &mut edges);
    }
    Ok(build(next, edges))
}

/// A tree with `m` degree-4 vertices whose radius-`m` balls contain only degree-2 vertices.
///
/// The branch vertices sit on a spine `2m+3` apart. The spine runs `m+2` past the
/// first and `m+3` past the last; branch `i` carries pendants of `m+4+2i` and `m+5+2i`
/// edges. All arm lengths differ, so the tree is rigid.
pub fn connected_model(m: usize) -> Result<Graph, ConstructionError> {
    check_range("connected model index", m, 1, CONNECTED_MODEL_CAP)?;
    let mut edges = Vec::new();
    let mut next = 1;
    let left_end = hang_path(0, m + 2, &mut next, &mut edges);
    let mut branch = Vec::with_capacity(m);
    let mut at = left_end;
    for i in 0..m {
        if i > 0 {
            at = hang_path(at, 2 * m + 3, &mut next, &mut edges);
        }
        branch.push(at);
    }
    hang_path(at, m + 3, &mut next, &mut edges);
    for (i, &b) in branch.iter().enumerate() {
        hang_path(b, m + 4 + 2 * i, &mut next, &mut edges);
        hang_path(b, m + 5 + 2 * i, &mut next, &mut edges);
    }
    Ok(build(next, edges))
}

/// The radius-`depth` ball around the root of the tree where the root has
/// `root_degree` neighbours and every other vertex has 5. Breadth-first labels.
pub fn truncated_tree_45(depth: usize, root_degree: usize) -> Result<Graph, ConstructionError> {
    check_range("truncation depth", depth, 1, TRUNCATED_DEPTH_CAP)?;
    if root_degree != 4 && root_degree != 5 {
        return Err(ConstructionError::InvalidParameter(format!("root degree must be 4 or 5, got {root_degree}")));
    }
    let mut edges = Vec::new();
    let mut frontier = vec![0];
    let mut next = 1;
    for level in 0..depth {
        let children = if level == 0 { root_degree } else { 4 };
        let mut grown = Vec::with_capacity(frontier.len() * children);
        for &v in &frontier {
            for _ in 0..children {
                edges.push((v, next));
                grown.push(next);
                next += 1;
            }
        }
        frontier = grown;
    }
    Ok(build(next, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{component_count, is_acyclic, is_connected};

    #[test]
    fn binary_tree_shapes() {
        let b0 = binary_tree(0).unwrap();
        assert_eq!((b0.graph.vertex_count(), b0.leaves.clone()), (1, vec![0]));
        let b1 = binary_tree(1).unwrap();
        assert_eq!(b1.graph.vertex_count(), 3);
        assert_eq!(b1.leaves, vec![1, 2]);
        let b3 = binary_tree(3).unwrap();
        assert_eq!((b3.graph.vertex_count(), b3.leaves.len()), (15, 8));
        assert_eq!(b3.graph.degree(0), 2);
        assert!(binary_tree(13).is_err());
    }

    #[test]
    fn four_arm_shapes() {
        let t1 = four_arm_tree(1).unwrap();
        assert_eq!((t1.graph.vertex_count(), t1.leaves.len(), t1.graph.degree(0)), (13, 8, 4));
        let t2 = four_arm_tree(2).unwrap();
        assert_eq!((t2.graph.vertex_count(), t2.leaves.len()), (29, 16));
        assert!(t2.leaves.iter().all(|&l| t2.graph.degree(l) == 1));
        assert!(four_arm_tree(0).is_err());
        assert!(matches!(four_arm_tree(11), Err(ConstructionError::CapExceeded { .. })));
    }

    #[test]
    fn paths() {
        let p = path_graph(3).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (4, 3));
        assert!(is_connected(&p));
        assert_eq!(path_graph(1).unwrap().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(path_graph(0).is_err());
    }

    #[test]
    fn rigid_forest_shape() {
        let f1 = rigid_forest(1).unwrap();
        assert_eq!(f1.vertex_count(), 57);
        assert_eq!(component_count(&f1), 1);
        let f2 = rigid_forest(2).unwrap();
        let leaves = 2 * 16;
        assert_eq!(f2.vertex_count(), 2 * 29 + (1..=leaves).map(|k| k + 1).sum::<usize>());
        assert_eq!(component_count(&f2), 2);
        assert!(is_acyclic(&f2));
        assert_eq!((0..f2.vertex_count()).filter(|&v| f2.degree(v) == 4).count(), 2);
        assert_eq!(rigid_forest(2).unwrap(), f2);
    }

    #[test]
    fn connected_model_shape() {
        for m in 1..=CONNECTED_MODEL_CAP {
            let g = connected_model(m).unwrap();
            assert!(is_connected(&g) && is_acyclic(&g));
            assert_eq!((0..g.vertex_count()).filter(|&v| g.degree(v) == 4).count(), m);
            assert!((0..g.vertex_count()).all(|v| matches!(g.degree(v), 1 | 2 | 4)));
        }
    }

    #[test]
    fn truncated_tree_shape() {
        let star = truncated_tree_45(1, 4).unwrap();
        assert_eq!(star.vertex_count(), 5);
        let t = truncated_tree_45(3, 5).unwrap();
        assert_eq!(t.vertex_count(), 1 + 5 + 20 + 80);
        let interior = 1 + 5 + 20;
        assert!((0..interior).all(|v| t.degree(v) == 5));
        assert!((interior..t.vertex_count()).all(|v| t.degree(v) == 1));
        assert!(truncated_tree_45(2, 3).is_err());
        assert!(truncated_tree_45(9, 4).is_err());
    }
}
