//! Planar networks of 4-leg boxes: construction and planarity validation.

use super::TangleError;
use crate::baxter::TwoBox;
use std::collections::HashMap;

/// An attachment point of a strand: a boundary point of the output
/// rectangle or one leg of a box.
///
/// Boundary points: `Bottom(i)` / `Top(i)` for `i` in `0..n`, numbered left
/// to right.  Box legs are numbered counterclockwise from the bottom-left
/// corner: `0` bottom-left, `1` bottom-right, `2` top-right, `3` top-left;
/// payloads are attached in this standard orientation (rotate the payload
/// itself to model a rotated attachment).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Port {
    Bottom(usize),
    Top(usize),
    Leg { box_id: usize, leg: u8 },
}

/// A 4-leg box holding a 2-box payload expanded over `{𝟙, e, x}` where `x`
/// is the algebra's third 2-box basis element (when it has one).
#[derive(Clone, Debug)]
pub struct TangleBox {
    pub payload: TwoBox,
}

/// A planar network: boxes, a perfect matching of all ports, and a count
/// of free closed loops.  Planarity (genus zero of every connected
/// component of the associated ribbon graph) is validated at construction.
#[derive(Clone, Debug)]
pub struct TangleNet {
    pub n: usize,
    pub boxes: Vec<TangleBox>,
    pub strands: Vec<(Port, Port)>,
    pub free_loops: usize,
}

impl TangleNet {
    pub fn new(
        n: usize,
        boxes: Vec<TangleBox>,
        strands: Vec<(Port, Port)>,
        free_loops: usize,
    ) -> Result<Self, TangleError> {
        let net = TangleNet { n, boxes, strands, free_loops };
        net.check_matching()?;
        net.check_planar()?;
        Ok(net)
    }

    fn ports(&self) -> Vec<Port> {
        let mut v: Vec<Port> = (0..self.n).map(Port::Bottom).collect();
        v.extend((0..self.n).map(Port::Top));
        for b in 0..self.boxes.len() {
            v.extend((0..4).map(|leg| Port::Leg { box_id: b, leg }));
        }
        v
    }

    fn check_matching(&self) -> Result<(), TangleError> {
        let mut seen: HashMap<Port, usize> = HashMap::new();
        for &(a, b) in &self.strands {
            *seen.entry(a).or_default() += 1;
            *seen.entry(b).or_default() += 1;
        }
        for p in self.ports() {
            let c = seen.remove(&p).unwrap_or(0);
            if c != 1 {
                return Err(TangleError::PortMultiplicity(p, c));
            }
        }
        if let Some((&p, &c)) = seen.iter().next() {
            let err = match p {
                Port::Leg { box_id, .. } if box_id >= self.boxes.len() => {
                    TangleError::BoxIdRange(box_id)
                }
                _ => TangleError::PortMultiplicity(p, c),
            };
            return Err(err);
        }
        Ok(())
    }

    /// Planarity via the rotation-system genus: vertices are the boxes plus
    /// one outer vertex for the rectangle boundary, each with its
    /// counterclockwise cyclic order of attachments; the network embeds in
    /// the disk exactly when every connected component has genus zero.
    fn check_planar(&self) -> Result<(), TangleError> {
        let nb = self.boxes.len();
        let outer = nb; // vertex id of the boundary vertex
        let nv = nb + 1;

        // Rotation at each vertex: the ports in counterclockwise order.
        let mut rotations: Vec<Vec<Port>> = (0..nb)
            .map(|b| (0..4).map(|leg| Port::Leg { box_id: b, leg }).collect())
            .collect();
        // Counterclockwise around the outer vertex = clockwise along the
        // rectangle boundary.
        let mut boundary: Vec<Port> = (0..self.n).rev().map(Port::Bottom).collect();
        boundary.extend((0..self.n).map(Port::Top));
        rotations.push(boundary);

        let vertex_of = |p: Port| -> usize {
            match p {
                Port::Leg { box_id, .. } => box_id,
                _ => outer,
            }
        };
        // slot[(port)] = index within its vertex rotation
        let mut slot: HashMap<Port, usize> = HashMap::new();
        for rot in &rotations {
            for (i, &p) in rot.iter().enumerate() {
                slot.insert(p, i);
            }
        }

        // Directed half-edges: (strand index, direction); direction `d`
        // means the traversal ends at port `strands[i].{d}`.
        let e = self.strands.len();
        if e == 0 {
            return Ok(());
        }
        let end = |i: usize, d: usize| if d == 0 { self.strands[i].0 } else { self.strands[i].1 };

        // Union-find over vertices for per-component Euler characteristics.
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..e {
            let (a, b) = (vertex_of(end(i, 0)), vertex_of(end(i, 1)));
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }

        // Count faces: orbits of "arrive at a port, leave from the next
        // port counterclockwise".
        let mut visited = vec![[false; 2]; e];
        let mut faces_of_comp: HashMap<usize, i64> = HashMap::new();
        for i in 0..e {
            for d in 0..2 {
                if visited[i][d] {
                    continue;
                }
                let comp = find(&mut parent, vertex_of(end(i, d)));
                *faces_of_comp.entry(comp).or_default() += 1;
                let (mut ci, mut cd) = (i, d);
                loop {
                    visited[ci][cd] = true;
                    let arrive = end(ci, cd);
                    let v = vertex_of(arrive);
                    let rot = &rotations[v];
                    let s = slot[&arrive];
                    let next_port = rot[(s + 1) % rot.len()];
                    // Leave along the strand at `next_port`, toward its
                    // other end.
                    let (ni, nd) = self
                        .strands
                        .iter()
                        .enumerate()
                        .find_map(|(j, &(a, b))| {
                            if a == next_port {
                                Some((j, 1))
                            } else if b == next_port {
                                Some((j, 0))
                            } else {
                                None
                            }
                        })
                        .expect("matching already validated");
                    if (ni, nd) == (i, d) {
                        break;
                    }
                    ci = ni;
                    cd = nd;
                }
            }
        }

        // Per-component Euler characteristic V - E + F = 2 - 2g.
        let mut v_of: HashMap<usize, i64> = HashMap::new();
        let mut e_of: HashMap<usize, i64> = HashMap::new();
        for v in 0..nv {
            // Isolated vertices (no incident strand) are trivially planar.
            let incident = self
                .strands
                .iter()
                .any(|&(a, b)| vertex_of(a) == v || vertex_of(b) == v);
            if incident {
                let r = find(&mut parent, v);
                *v_of.entry(r).or_default() += 1;
            }
        }
        for i in 0..e {
            let r = find(&mut parent, vertex_of(end(i, 0)));
            *e_of.entry(r).or_default() += 1;
        }
        for (comp, &f) in &faces_of_comp {
            let v = v_of.get(comp).copied().unwrap_or(0);
            let ec = e_of.get(comp).copied().unwrap_or(0);
            if v - ec + f != 2 {
                return Err(TangleError::NonPlanar);
            }
        }
        Ok(())
    }
}

/// The double-row transfer network on `n` strands: `2n` copies of the
/// payload threaded by an auxiliary line with U-turns at both ends
/// (boundary 1-boxes taken as identity strands).  Box legs are assigned to
/// the geometric sides West, South, East, North in counterclockwise order
/// with per-row offsets `rb` (bottom row) and `rt` (top row): payload leg
/// `k` sits on side `(k + r) % 4` of the cycle `[W, S, E, N]`.
pub fn build_transfer_net(
    n: usize,
    payload: &TwoBox,
    rb: u8,
    rt: u8,
) -> Result<TangleNet, TangleError> {
    assert!(n >= 1);
    let boxes: Vec<TangleBox> = (0..2 * n)
        .map(|_| TangleBox { payload: payload.clone() })
        .collect();
    // Bottom-row box `i` has id `i`, top-row box `i` has id `n + i`.
    // side: 0 = W, 1 = S, 2 = E, 3 = N.
    let leg = |box_id: usize, side: u8| -> Port {
        let r = if box_id < n { rb } else { rt };
        Port::Leg { box_id, leg: (side + 4 - r) % 4 }
    };
    let mut strands: Vec<(Port, Port)> = Vec::new();
    for i in 0..n {
        strands.push((leg(i, 1), Port::Bottom(i))); // bottom row South
        strands.push((leg(i, 3), leg(n + i, 1))); // bottom North to top South
        strands.push((leg(n + i, 3), Port::Top(i))); // top row North
    }
    // Auxiliary line: left U-turn, along the bottom row, right U-turn,
    // back along the top row.
    strands.push((leg(0, 0), leg(n, 0)));
    for i in 0..n - 1 {
        strands.push((leg(i, 2), leg(i + 1, 0)));
        strands.push((leg(n + i, 2), leg(n + i + 1, 0)));
    }
    strands.push((leg(n - 1, 2), leg(2 * n - 1, 2)));
    TangleNet::new(n, boxes, strands, 0)
}

/// The transfer network with its right U-turn cut open: the auxiliary line
/// enters at bottom point `n` and leaves at top point `n`, so the network
/// has boundary size `n + 1`.  Closing the extra strand with the partial
/// trace recovers the full transfer network.
pub fn build_transfer_net_open(
    n: usize,
    payload: &TwoBox,
    rb: u8,
    rt: u8,
) -> Result<TangleNet, TangleError> {
    assert!(n >= 1);
    let boxes: Vec<TangleBox> = (0..2 * n)
        .map(|_| TangleBox { payload: payload.clone() })
        .collect();
    let leg = |box_id: usize, side: u8| -> Port {
        let r = if box_id < n { rb } else { rt };
        Port::Leg { box_id, leg: (side + 4 - r) % 4 }
    };
    let mut strands: Vec<(Port, Port)> = Vec::new();
    for i in 0..n {
        strands.push((leg(i, 1), Port::Bottom(i)));
        strands.push((leg(i, 3), leg(n + i, 1)));
        strands.push((leg(n + i, 3), Port::Top(i)));
    }
    strands.push((leg(0, 0), leg(n, 0)));
    for i in 0..n - 1 {
        strands.push((leg(i, 2), leg(i + 1, 0)));
        strands.push((leg(n + i, 2), leg(n + i + 1, 0)));
    }
    strands.push((leg(n - 1, 2), Port::Bottom(n)));
    strands.push((leg(2 * n - 1, 2), Port::Top(n)));
    TangleNet::new(n + 1, boxes, strands, 0)
}
