use std::fmt;

use super::SurfaceError;

/// A side of a triangle: `(label, k)` is the side opposite corner `k`.
pub type Side = (u32, u8);

/// Labeled ideal triangles with a marked corner (corner 0) each, glued along
/// their sides.
///
/// Corners 0, 1, 2 run counterclockwise; side `k` runs from corner `k+1` to
/// corner `k+2`. Two glued sides are identified with opposite orientations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedTriangulation {
    // partner[3*(label-1) + k]
    partner: Vec<Side>,
    genus: u32,
    punctures: u32,
}

pub(crate) fn slot(s: Side) -> usize {
    3 * (s.0 as usize - 1) + s.1 as usize
}

fn side_of(slot: usize) -> Side {
    ((slot / 3) as u32 + 1, (slot % 3) as u8)
}

impl DecoratedTriangulation {
    /// Builds and validates a triangulation. `table[label-1][k]` is the side
    /// glued to side `k` of `label`.
    pub fn build(table: &[[Side; 3]]) -> Result<Self, SurfaceError> {
        let n = table.len();
        if n == 0 || n % 2 != 0 {
            return Err(SurfaceError::OddCount(n));
        }
        let mut partner = Vec::with_capacity(3 * n);
        for (t, row) in table.iter().enumerate() {
            for (k, &p) in row.iter().enumerate() {
                if p.0 == 0 || p.0 as usize > n || p.1 > 2 {
                    return Err(SurfaceError::LabelGap { side: (t as u32 + 1, k as u8), target: p });
                }
                partner.push(p);
            }
        }
        Self::from_partner(partner)
    }

    pub(crate) fn from_partner(partner: Vec<Side>) -> Result<Self, SurfaceError> {
        for (s, &p) in partner.iter().enumerate() {
            if slot(p) == s {
                return Err(SurfaceError::FixedSide(p));
            }
            if partner[slot(p)] != side_of(s) {
                return Err(SurfaceError::NotInvolution { side: side_of(s), target: p, back: partner[slot(p)] });
            }
        }
        let n = partner.len() / 3;
        let mut tri = DecoratedTriangulation { partner, genus: 0, punctures: 0 };
        if tri.components() != 1 {
            return Err(SurfaceError::NonSurface(format!("{} connected components", tri.components())));
        }
        let v = tri.vertex_classes().len() as i64;
        // χ = F - E + V with F = n, E = 3n/2
        let chi = n as i64 - 3 * n as i64 / 2 + v;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(SurfaceError::NonSurface(format!("Euler characteristic {chi} with {v} vertices")));
        }
        tri.genus = ((2 - chi) / 2) as u32;
        tri.punctures = v as u32;
        Ok(tri)
    }

    pub fn triangle_count(&self) -> usize {
        self.partner.len() / 3
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn partner(&self, s: Side) -> Side {
        self.partner[slot(s)]
    }

    pub fn table(&self) -> Vec<[Side; 3]> {
        self.partner.chunks(3).map(|c| [c[0], c[1], c[2]]).collect()
    }

    /// Glued side pairs, each listed once with the smaller side first.
    pub fn edges(&self) -> Vec<(Side, Side)> {
        (0..self.partner.len())
            .filter(|&s| s < slot(self.partner[s]))
            .map(|s| (side_of(s), self.partner[s]))
            .collect()
    }

    fn components(&self) -> usize {
        let n = self.triangle_count();
        let mut uf = UnionFind::new(n);
        for s in 0..self.partner.len() {
            uf.union(s / 3, slot(self.partner[s]) / 3);
        }
        uf.classes()
    }

    /// Corners grouped by the vertex (puncture) they sit at. A corner is
    /// `(label, k)`.
    pub fn vertex_classes(&self) -> Vec<Vec<(u32, u8)>> {
        let n = self.triangle_count();
        let mut uf = UnionFind::new(3 * n);
        for s in 0..self.partner.len() {
            let (t, k) = side_of(s);
            let (t2, k2) = self.partner[s];
            // corner k+1 of t meets corner k2+2 of t2, and k+2 meets k2+1
            uf.union(slot((t, (k + 1) % 3)), slot((t2, (k2 + 2) % 3)));
            uf.union(slot((t, (k + 2) % 3)), slot((t2, (k2 + 1) % 3)));
        }
        let mut groups: Vec<Vec<(u32, u8)>> = Vec::new();
        let mut root_index = std::collections::HashMap::new();
        for c in 0..3 * n {
            let r = uf.find(c);
            let g = *root_index.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(side_of(c));
        }
        groups
    }

    /// Moves every side slot: the side now at `s` ends up at `f(s)`.
    pub(crate) fn move_sides(&self, f: impl Fn(Side) -> Side) -> Self {
        let mut partner = vec![(0u32, 0u8); self.partner.len()];
        for s in 0..self.partner.len() {
            partner[slot(f(side_of(s)))] = f(self.partner[s]);
        }
        DecoratedTriangulation { partner, genus: self.genus, punctures: self.punctures }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

impl fmt::Display for DecoratedTriangulation {
    /// One line per triangle: `label : t.k t.k t.k`, the sides glued to sides
    /// 0, 1, 2.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, row) in self.table().iter().enumerate() {
            writeln!(f, "{} : {}.{} {}.{} {}.{}", t + 1, row[0].0, row[0].1, row[1].0, row[1].1, row[2].0, row[2].1)?;
        }
        Ok(())
    }
}

/// Parses the line format written by `Display`. Blank lines and `#`
/// comments are ignored; lines may come in any order.
pub fn parse_triangulation(src: &str) -> Result<DecoratedTriangulation, SurfaceError> {
    let mut rows: Vec<(u32, [Side; 3])> = Vec::new();
    for (ln, raw) in src.lines().enumerate() {
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: &str| SurfaceError::Parse { line: ln + 1, msg: msg.to_string() };
        let (lab, rest) = body.split_once(':').ok_or_else(|| err("expected `label : t.k t.k t.k`"))?;
        let lab: u32 = lab.trim().parse().map_err(|_| err("bad label"))?;
        let sides: Vec<Side> = rest
            .split_whitespace()
            .map(|tok| {
                let (t, k) = tok.split_once('.').ok_or_else(|| err("expected t.k"))?;
                Ok((t.parse().map_err(|_| err("bad label"))?, k.parse().map_err(|_| err("bad side"))?))
            })
            .collect::<Result<_, SurfaceError>>()?;
        if sides.len() != 3 {
            return Err(err("expected three sides"));
        }
        rows.push((lab, [sides[0], sides[1], sides[2]]));
    }
    if rows.is_empty() {
        return Err(SurfaceError::Parse { line: 0, msg: "no triangles".into() });
    }
    rows.sort_by_key(|r| r.0);
    for (i, (lab, _)) in rows.iter().enumerate() {
        if *lab != i as u32 + 1 {
            return Err(SurfaceError::LabelGap { side: (*lab, 0), target: (i as u32 + 1, 0) });
        }
    }
    let table: Vec<[Side; 3]> = rows.into_iter().map(|r| r.1).collect();
    DecoratedTriangulation::build(&table)
}
