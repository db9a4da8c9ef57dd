//! Closed oriented triangle meshes: storage, validation, and file I/O.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use nalgebra::Point3;

use super::GeometryError;

/// An indexed triangle mesh in `R^3`.
///
/// Construction checks indices, degeneracy, and coordinate finiteness;
/// closedness and orientation are checked separately by
/// [`SurfaceMesh::validate_closed_oriented`], since a freshly parsed mesh
/// may legitimately fail them and the caller decides how hard to be.
#[derive(Clone, Debug)]
pub struct SurfaceMesh {
    vertices: Vec<Point3<f64>>,
    triangles: Vec<[u32; 3]>,
}

impl SurfaceMesh {
    /// Build a mesh from raw vertex positions and triangle index triples.
    pub fn new(vertices: Vec<[f64; 3]>, triangles: Vec<[u32; 3]>) -> Result<Self, GeometryError> {
        if triangles.is_empty() {
            return Err(GeometryError::EmptyMesh);
        }
        for v in &vertices {
            for &c in v {
                if !c.is_finite() {
                    return Err(GeometryError::InvalidParameter {
                        name: "vertex coordinate",
                        value: c,
                    });
                }
            }
        }
        let count = vertices.len();
        for (i, t) in triangles.iter().enumerate() {
            for &idx in t {
                if idx as usize >= count {
                    return Err(GeometryError::IndexOutOfRange {
                        triangle: i,
                        index: idx,
                        count,
                    });
                }
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(GeometryError::DegenerateTriangle { triangle: i });
            }
        }
        Ok(Self {
            vertices: vertices
                .into_iter()
                .map(|[x, y, z]| Point3::new(x, y, z))
                .collect(),
            triangles,
        })
    }

    /// Vertex positions.
    pub fn vertices(&self) -> &[Point3<f64>] {
        &self.vertices
    }

    /// Triangle index triples, counterclockwise from outside.
    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        let mut edges = BTreeSet::new();
        for t in &self.triangles {
            for (a, b) in triangle_edges(t) {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        edges.len()
    }

    /// Euler characteristic `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.triangle_count() as i64
    }

    /// Check that the mesh is a closed, consistently oriented surface:
    /// every directed edge occurs exactly once and so does its reverse.
    pub fn validate_closed_oriented(&self) -> Result<(), GeometryError> {
        let mut directed: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for t in &self.triangles {
            for (a, b) in triangle_edges(t) {
                *directed.entry((a, b)).or_default() += 1;
            }
        }
        for (&(a, b), &uses) in &directed {
            if uses > 1 {
                return Err(GeometryError::NotOriented { a, b });
            }
            let reverse = directed.get(&(b, a)).copied().unwrap_or(0);
            if reverse == 0 {
                return Err(GeometryError::NotClosed { a, b, uses });
            }
        }
        Ok(())
    }

    /// Load a mesh from a `.off` or `.obj` file, dispatching on the
    /// extension.
    pub fn load(path: &Path) -> Result<Self, GeometryError> {
        let text = std::fs::read_to_string(path)?;
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("off") => Self::from_off_text(&text),
            Some("obj") => Self::from_obj_text(&text),
            _ => Err(GeometryError::Parse {
                line: 0,
                detail: format!("unsupported mesh extension on {}", path.display()),
            }),
        }
    }

    /// Write the mesh in OFF format.
    pub fn save_off(&self, path: &Path) -> Result<(), GeometryError> {
        let mut out = String::from("OFF\n");
        out.push_str(&format!(
            "{} {} {}\n",
            self.vertex_count(),
            self.triangle_count(),
            self.edge_count()
        ));
        for v in &self.vertices {
            out.push_str(&format!("{} {} {}\n", v.x, v.y, v.z));
        }
        for t in &self.triangles {
            out.push_str(&format!("3 {} {} {}\n", t[0], t[1], t[2]));
        }
        std::fs::write(path, out)?;
        Ok(())
    }

    /// Parse OFF text: an `OFF` header, a `V F E` count line, `V` vertex
    /// lines, then `F` face lines each starting with its vertex count
    /// (which must be 3). `#` comments and blank lines are skipped.
    pub fn from_off_text(text: &str) -> Result<Self, GeometryError> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or(GeometryError::Parse {
            line: 0,
            detail: "empty OFF file".into(),
        })?;
        // The counts may share the header line ("OFF V F E") or follow it.
        let mut header_tokens = header.split_whitespace();
        if header_tokens.next() != Some("OFF") {
            return Err(GeometryError::Parse {
                line,
                detail: "missing OFF header".into(),
            });
        }
        let rest: Vec<&str> = header_tokens.collect();
        let (counts_line, counts) = if rest.is_empty() {
            let (l, c) = lines.next().ok_or(GeometryError::Parse {
                line,
                detail: "missing count line".into(),
            })?;
            (l, c.split_whitespace().collect::<Vec<_>>())
        } else {
            (line, rest)
        };
        if counts.len() < 2 {
            return Err(GeometryError::Parse {
                line: counts_line,
                detail: "count line needs vertex and face counts".into(),
            });
        }
        let nv: usize = parse_token(counts[0], counts_line, "vertex count")?;
        let nf: usize = parse_token(counts[1], counts_line, "face count")?;

        let mut vertices = Vec::with_capacity(nv);
        for _ in 0..nv {
            let (l, text) = lines.next().ok_or(GeometryError::Parse {
                line: counts_line,
                detail: format!("expected {nv} vertex lines"),
            })?;
            let mut it = text.split_whitespace();
            let mut v = [0.0f64; 3];
            for c in &mut v {
                *c = parse_token(
                    it.next().ok_or(GeometryError::Parse {
                        line: l,
                        detail: "vertex line needs three coordinates".into(),
                    })?,
                    l,
                    "coordinate",
                )?;
            }
            vertices.push(v);
        }
        let mut triangles = Vec::with_capacity(nf);
        for _ in 0..nf {
            let (l, text) = lines.next().ok_or(GeometryError::Parse {
                line: counts_line,
                detail: format!("expected {nf} face lines"),
            })?;
            let tokens: Vec<&str> = text.split_whitespace().collect();
            if tokens.first() != Some(&"3") || tokens.len() < 4 {
                return Err(GeometryError::Parse {
                    line: l,
                    detail: "only triangle faces are supported".into(),
                });
            }
            triangles.push([
                parse_token(tokens[1], l, "vertex index")?,
                parse_token(tokens[2], l, "vertex index")?,
                parse_token(tokens[3], l, "vertex index")?,
            ]);
        }
        Self::new(vertices, triangles)
    }

    /// Parse Wavefront OBJ text: `v x y z` and triangular `f` lines (the
    /// `i/t/n` forms are accepted, everything after the first slash is
    /// ignored); all other line types are skipped.
    pub fn from_obj_text(text: &str) -> Result<Self, GeometryError> {
        let mut vertices: Vec<[f64; 3]> = Vec::new();
        let mut triangles: Vec<[u32; 3]> = Vec::new();
        for (line, text) in content_lines(text) {
            let mut it = text.split_whitespace();
            match it.next() {
                Some("v") => {
                    let mut v = [0.0f64; 3];
                    for c in &mut v {
                        *c = parse_token(
                            it.next().ok_or(GeometryError::Parse {
                                line,
                                detail: "vertex line needs three coordinates".into(),
                            })?,
                            line,
                            "coordinate",
                        )?;
                    }
                    vertices.push(v);
                }
                Some("f") => {
                    let corners: Vec<&str> = it.collect();
                    if corners.len() != 3 {
                        return Err(GeometryError::Parse {
                            line,
                            detail: format!(
                                "face with {} corners; only triangles are supported",
                                corners.len()
                            ),
                        });
                    }
                    let mut t = [0u32; 3];
                    for (slot, corner) in t.iter_mut().zip(&corners) {
                        let index_text = corner.split('/').next().unwrap_or("");
                        let one_based: i64 = parse_token(index_text, line, "face index")?;
                        if one_based < 1 {
                            return Err(GeometryError::Parse {
                                line,
                                detail: format!("face index {one_based} must be positive"),
                            });
                        }
                        *slot = (one_based - 1) as u32;
                    }
                    triangles.push(t);
                }
                _ => {}
            }
        }
        Self::new(vertices, triangles)
    }
}

/// The three directed edges of a triangle.
fn triangle_edges(t: &[u32; 3]) -> [(u32, u32); 3] {
    [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
}

/// Non-blank, non-comment lines with their one-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let trimmed = l.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, trimmed))
        }
    })
}

/// Parse one whitespace token with a located error.
fn parse_token<T: std::str::FromStr>(
    token: &str,
    line: usize,
    what: &str,
) -> Result<T, GeometryError> {
    token.parse().map_err(|_| GeometryError::Parse {
        line,
        detail: format!("bad {what} `{token}`"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Regular tetrahedron with outward-oriented faces.
    pub(crate) fn tetrahedron() -> SurfaceMesh {
        SurfaceMesh::new(
            vec![
                [1.0, 1.0, 1.0],
                [1.0, -1.0, -1.0],
                [-1.0, 1.0, -1.0],
                [-1.0, -1.0, 1.0],
            ],
            vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
        )
        .unwrap()
    }

    #[test]
    fn tetrahedron_is_closed_oriented_with_euler_two() {
        let mesh = tetrahedron();
        mesh.validate_closed_oriented().unwrap();
        assert_eq!(mesh.vertex_count(), 4);
        assert_eq!(mesh.edge_count(), 6);
        assert_eq!(mesh.triangle_count(), 4);
        assert_eq!(mesh.euler_characteristic(), 2);
    }

    #[test]
    fn flipped_face_breaks_orientation() {
        let mesh = SurfaceMesh::new(
            vec![
                [1.0, 1.0, 1.0],
                [1.0, -1.0, -1.0],
                [-1.0, 1.0, -1.0],
                [-1.0, -1.0, 1.0],
            ],
            vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 2, 3]],
        )
        .unwrap();
        assert!(matches!(
            mesh.validate_closed_oriented(),
            Err(GeometryError::NotOriented { .. })
        ));
    }

    #[test]
    fn missing_face_breaks_closedness() {
        let mesh = SurfaceMesh::new(
            vec![
                [1.0, 1.0, 1.0],
                [1.0, -1.0, -1.0],
                [-1.0, 1.0, -1.0],
                [-1.0, -1.0, 1.0],
            ],
            vec![[0, 1, 2], [0, 3, 1], [0, 2, 3]],
        )
        .unwrap();
        assert!(matches!(
            mesh.validate_closed_oriented(),
            Err(GeometryError::NotClosed { .. })
        ));
    }

    #[test]
    fn construction_guards() {
        assert!(matches!(
            SurfaceMesh::new(vec![[0.0; 3]], vec![]),
            Err(GeometryError::EmptyMesh)
        ));
        assert!(matches!(
            SurfaceMesh::new(vec![[0.0; 3]; 3], vec![[0, 1, 3]]),
            Err(GeometryError::IndexOutOfRange { index: 3, .. })
        ));
        assert!(matches!(
            SurfaceMesh::new(vec![[0.0; 3]; 3], vec![[0, 1, 1]]),
            Err(GeometryError::DegenerateTriangle { triangle: 0 })
        ));
        assert!(matches!(
            SurfaceMesh::new(vec![[f64::NAN; 3]; 3], vec![[0, 1, 2]]),
            Err(GeometryError::InvalidParameter { .. })
        ));
    }

    #[test]
    fn off_text_round_trip() {
        let text = "\
# a comment
OFF
4 4 6
1 1 1
1 -1 -1
-1 1 -1
-1 -1 1
3 0 1 2
3 0 3 1
3 0 2 3
3 1 3 2
";
        let mesh = SurfaceMesh::from_off_text(text).unwrap();
        mesh.validate_closed_oriented().unwrap();
        assert_eq!(mesh.euler_characteristic(), 2);

        // Header variant with counts on the same line.
        let inline = text.replace("OFF\n4 4 6", "OFF 4 4 6");
        let mesh2 = SurfaceMesh::from_off_text(&inline).unwrap();
        assert_eq!(mesh2.triangle_count(), 4);
    }

    #[test]
    fn obj_text_accepts_slash_forms() {
        let text = "\
o tetra
v 1 1 1
v 1 -1 -1
v -1 1 -1
v -1 -1 1
vn 0 0 1
f 1/1/1 2/2/1 3/3/1
f 1 4 2
f 1/1 3/3 4/4
f 2 4 3
";
        let mesh = SurfaceMesh::from_obj_text(text).unwrap();
        mesh.validate_closed_oriented().unwrap();
        assert_eq!(mesh.euler_characteristic(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = SurfaceMesh::from_off_text("OFF\n1 1 0\nnope 0 0\n3 0 0 0\n").unwrap_err();
        match err {
            GeometryError::Parse { line, detail } => {
                assert_eq!(line, 3);
                assert!(detail.contains("nope"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            SurfaceMesh::from_obj_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\nf 1 2 3 4\n"),
            Err(GeometryError::Parse { line: 5, .. })
        ));
    }

    #[test]
    fn file_round_trip_through_off() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tetra.off");
        let mesh = tetrahedron();
        mesh.save_off(&path).unwrap();
        let back = SurfaceMesh::load(&path).unwrap();
        assert_eq!(back.triangles(), mesh.triangles());
        assert_eq!(back.vertices(), mesh.vertices());

        let bad = dir.path().join("tetra.stl");
        std::fs::write(&bad, "whatever").unwrap();
        assert!(matches!(
            SurfaceMesh::load(&bad),
            Err(GeometryError::Parse { line: 0, .. })
        ));
    }
}
