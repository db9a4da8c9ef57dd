//! Reference surfaces: icospheres, ellipsoids, and tori.

use std::collections::BTreeMap;

use super::{GeometryError, SurfaceMesh};

/// Cap on icosphere subdivisions (8 gives 1.3M triangles).
const MAX_SUBDIVISIONS: u32 = 8;

/// Cap on torus resolution (2048 gives 8.4M triangles).
const MAX_RESOLUTION: u32 = 2048;

/// Vertex and triangle buffers before mesh validation.
type RawBuffers = (Vec<[f64; 3]>, Vec<[u32; 3]>);

/// A geodesic sphere of the given radius: an icosahedron with each face
/// split four-ways `subdivisions` times, all vertices projected to the
/// sphere. Faces are oriented outward.
pub fn icosphere(radius: f64, subdivisions: u32) -> Result<SurfaceMesh, GeometryError> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(GeometryError::InvalidParameter {
            name: "radius",
            value: radius,
        });
    }
    let (mut vertices, triangles) = unit_icosphere_raw(subdivisions)?;
    for v in &mut vertices {
        for c in v.iter_mut() {
            *c *= radius;
        }
    }
    SurfaceMesh::new(vertices, triangles)
}

/// An ellipsoid with semi-axes `(a, b, c)`: a unit icosphere scaled
/// componentwise, which preserves the outward orientation.
pub fn ellipsoid(a: f64, b: f64, c: f64, subdivisions: u32) -> Result<SurfaceMesh, GeometryError> {
    for (name, value) in [("a", a), ("b", b), ("c", c)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(GeometryError::InvalidParameter { name, value });
        }
    }
    let (mut vertices, triangles) = unit_icosphere_raw(subdivisions)?;
    for v in &mut vertices {
        v[0] *= a;
        v[1] *= b;
        v[2] *= c;
    }
    SurfaceMesh::new(vertices, triangles)
}

/// A torus of revolution: tube of radius `small_r` around a circle of
/// radius `big_r` in the `xy`-plane, sampled on a `resolution × resolution`
/// grid. Requires `big_r > small_r > 0` so the surface is embedded.
pub fn torus(big_r: f64, small_r: f64, resolution: u32) -> Result<SurfaceMesh, GeometryError> {
    if !(small_r.is_finite() && small_r > 0.0) {
        return Err(GeometryError::InvalidParameter {
            name: "small_r",
            value: small_r,
        });
    }
    if !(big_r.is_finite() && big_r > small_r) {
        return Err(GeometryError::InvalidParameter {
            name: "big_r",
            value: big_r,
        });
    }
    if !(3..=MAX_RESOLUTION).contains(&resolution) {
        return Err(GeometryError::InvalidParameter {
            name: "resolution",
            value: f64::from(resolution),
        });
    }
    let res = resolution as usize;
    let step = std::f64::consts::TAU / resolution as f64;
    let mut vertices = Vec::with_capacity(res * res);
    for i in 0..res {
        let u = step * i as f64;
        for j in 0..res {
            let v = step * j as f64;
            let ring = big_r + small_r * v.cos();
            vertices.push([ring * u.cos(), ring * u.sin(), small_r * v.sin()]);
        }
    }
    let index = |i: usize, j: usize| ((i % res) * res + (j % res)) as u32;
    let mut triangles = Vec::with_capacity(2 * res * res);
    for i in 0..res {
        for j in 0..res {
            // Quad corners in right-handed (u, v) order face outward.
            let p00 = index(i, j);
            let p10 = index(i + 1, j);
            let p01 = index(i, j + 1);
            let p11 = index(i + 1, j + 1);
            triangles.push([p00, p10, p11]);
            triangles.push([p00, p11, p01]);
        }
    }
    SurfaceMesh::new(vertices, triangles)
}

/// Unit icosphere vertices and outward-oriented triangles.
fn unit_icosphere_raw(subdivisions: u32) -> Result<RawBuffers, GeometryError> {
    if subdivisions > MAX_SUBDIVISIONS {
        return Err(GeometryError::InvalidParameter {
            name: "subdivisions",
            value: f64::from(subdivisions),
        });
    }
    let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
    let mut vertices: Vec<[f64; 3]> = vec![
        [-1.0, phi, 0.0],
        [1.0, phi, 0.0],
        [-1.0, -phi, 0.0],
        [1.0, -phi, 0.0],
        [0.0, -1.0, phi],
        [0.0, 1.0, phi],
        [0.0, -1.0, -phi],
        [0.0, 1.0, -phi],
        [phi, 0.0, -1.0],
        [phi, 0.0, 1.0],
        [-phi, 0.0, -1.0],
        [-phi, 0.0, 1.0],
    ];
    for v in &mut vertices {
        normalize(v);
    }
    let mut triangles: Vec<[u32; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    // Enforce outward orientation programmatically rather than trusting the
    // table: the solid is convex and centered, so the correct normal of a
    // face points away from the origin.
    for t in &mut triangles {
        let [a, b, c] = [
            vertices[t[0] as usize],
            vertices[t[1] as usize],
            vertices[t[2] as usize],
        ];
        let e1 = sub(b, a);
        let e2 = sub(c, a);
        let n = cross(e1, e2);
        let centroid = [a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]];
        if dot(n, centroid) < 0.0 {
            t.swap(1, 2);
        }
    }

    for _ in 0..subdivisions {
        let mut midpoint: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let mut next = Vec::with_capacity(triangles.len() * 4);
        for t in &triangles {
            let mid = |cache: &mut BTreeMap<(u32, u32), u32>,
                       verts: &mut Vec<[f64; 3]>,
                       a: u32,
                       b: u32| {
                let key = (a.min(b), a.max(b));
                *cache.entry(key).or_insert_with(|| {
                    let (p, q) = (verts[a as usize], verts[b as usize]);
                    let mut m = [
                        (p[0] + q[0]) / 2.0,
                        (p[1] + q[1]) / 2.0,
                        (p[2] + q[2]) / 2.0,
                    ];
                    normalize(&mut m);
                    verts.push(m);
                    (verts.len() - 1) as u32
                })
            };
            let ab = mid(&mut midpoint, &mut vertices, t[0], t[1]);
            let bc = mid(&mut midpoint, &mut vertices, t[1], t[2]);
            let ca = mid(&mut midpoint, &mut vertices, t[2], t[0]);
            next.push([t[0], ab, ca]);
            next.push([t[1], bc, ab]);
            next.push([t[2], ca, bc]);
            next.push([ab, bc, ca]);
        }
        triangles = next;
    }
    Ok((vertices, triangles))
}

fn normalize(v: &mut [f64; 3]) {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    v[0] /= norm;
    v[1] /= norm;
    v[2] /= norm;
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}
