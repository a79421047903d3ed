//! Reidemeister I/II simplification of planar diagrams.
//!
//! Shrinking a diagram before polynomial work is a pure optimization: both
//! moves preserve the knot type, and the invariants downstream are exactly
//! that — invariant. The bracket functions never simplify internally, so
//! oracle comparisons always see the diagram they were given.

use diagram_convert::PlanarDiagram;

/// Slot-level connection table: endpoint `4k + s` is slot `s` of crossing
/// `k`; `conn[e]` is the endpoint sharing an arc with `e`.
struct Connections {
    conn: Vec<usize>,
    /// Slot of the incoming over-arc per crossing (1 or 3).
    over_in_slot: Vec<usize>,
}

impl Connections {
    fn build(pd: &PlanarDiagram) -> Self {
        let c = pd.crossing_count();
        let mut by_arc: Vec<Vec<usize>> = vec![Vec::new(); 2 * c + 1];
        for (k, tuple) in pd.crossings().iter().enumerate() {
            for (s, &arc) in tuple.iter().enumerate() {
                by_arc[arc as usize].push(4 * k + s);
            }
        }
        let mut conn = vec![usize::MAX; 4 * c];
        for ends in by_arc.iter().skip(1) {
            debug_assert_eq!(ends.len(), 2);
            conn[ends[0]] = ends[1];
            conn[ends[1]] = ends[0];
        }
        let over_in_slot = (0..c)
            .map(|k| if pd.crossing_sign(k) > 0 { 3 } else { 1 })
            .collect();
        Connections { conn, over_in_slot }
    }
}

/// One simplification pass: the first applicable R1 kink or R2 bigon, with
/// the affected crossings removed and strands spliced.
fn simplify_once(pd: &PlanarDiagram) -> Option<PlanarDiagram> {
    let c = pd.crossing_count();
    if c == 0 {
        return None;
    }
    let net = Connections::build(pd);

    // R1: an arc joining two slots of one crossing (always adjacent slots
    // in a valid code) is a kink.
    for k in 0..c {
        if (0..4).any(|s| net.conn[4 * k + s] / 4 == k) {
            return Some(rebuild_without(pd, &net, &[k]));
        }
    }

    // R2: crossings k, l joined by two arcs on consecutive slots of each,
    // in reversed rotational order (an untwisted bigon), where each arc is
    // on the same strand level at both ends — one strand fully over.
    for k in 0..c {
        for g in 0..4 {
            let e1 = net.conn[4 * k + g];
            let e2 = net.conn[4 * k + (g + 1) % 4];
            let l = e1 / 4;
            if l == k || e2 / 4 != l {
                continue;
            }
            let h1 = e1 % 4;
            let h2 = e2 % 4;
            if h2 != (h1 + 3) % 4 {
                continue;
            }
            if g % 2 == h1 % 2 {
                return Some(rebuild_without(pd, &net, &[k, l]));
            }
        }
    }
    None
}

/// Removes the given crossings, splicing the strands that ran through
/// them, and relabels arcs by re-walking the knot.
fn rebuild_without(
    pd: &PlanarDiagram,
    net: &Connections,
    removed: &[usize],
) -> PlanarDiagram {
    use diagram_convert::walk_support::{Role, Walk};

    let c = pd.crossing_count();
    let mut alive = vec![true; c];
    for &k in removed {
        alive[k] = false;
    }
    let survivors: Vec<usize> = (0..c).filter(|&k| alive[k]).collect();
    if survivors.is_empty() {
        return PlanarDiagram::unknot();
    }
    let dense: Vec<usize> = {
        let mut map = vec![usize::MAX; c];
        for (i, &k) in survivors.iter().enumerate() {
            map[k] = i;
        }
        map
    };

    // Follow an outgoing endpoint to the next incoming endpoint of a
    // surviving crossing, passing straight through removed crossings.
    let next_in = |from: usize| -> usize {
        let mut e = net.conn[from];
        while !alive[e / 4] {
            e = net.conn[e ^ 2]; // straight through: slot 0<->2, 1<->3
        }
        e
    };

    let start = 4 * survivors[0] + 2; // under-out of the first survivor
    let mut passages = Vec::new();
    let mut e = start;
    loop {
        let incoming = next_in(e);
        let (k, s) = (incoming / 4, incoming % 4);
        let role = if s == 0 {
            Role::Under
        } else {
            debug_assert_eq!(s, net.over_in_slot[k]);
            Role::Over
        };
        passages.push((dense[k], role));
        e = incoming ^ 2;
        if e == start {
            break;
        }
    }

    let over_in_ccw = survivors
        .iter()
        .map(|&k| net.over_in_slot[k] == 1)
        .collect();
    Walk {
        crossing_count: survivors.len(),
        passages,
        over_in_ccw,
    }
    .assemble()
    .expect("splicing preserves the arc structure")
}

/// Applies Reidemeister I and II removals until none is available.
///
/// The result represents the same knot with at most as many crossings.
pub fn simplify(pd: &PlanarDiagram) -> PlanarDiagram {
    let mut current = pd.clone();
    while let Some(smaller) = simplify_once(&current) {
        current = smaller;
    }
    current
}
