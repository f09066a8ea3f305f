use std::io::Write;

use serde::Serialize;

use nutkit::graph::Graph;
use nutkit::nut::{core_witness, edge_signatures, nullity, nut_witness, EdgeClass};
use nutkit::symmetry::{automorphism_group, orbits, OrbitSignature};

/// Bumped whenever a key is renamed or removed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub avg: f64,
    pub max: usize,
}

/// Edge orbits split by whether both ends lie in one vertex orbit, and
/// (for nut graphs) by the kernel signs on the edge.
#[derive(Debug, Default, Serialize)]
pub struct EdgeOrbitTypes {
    pub intra: usize,
    pub inter: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intra_like: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intra_unlike: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inter_like: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inter_unlike: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct AnalysisRecord {
    pub schema_version: u32,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub degree: DegreeStats,
    pub connected: bool,
    pub bipartite: bool,
    pub nullity: usize,
    pub is_nut: bool,
    pub is_core: bool,
    pub signature: OrbitSignature,
    /// Primitive integer kernel vector, as decimal strings; only when the
    /// nullity is one.
    pub kernel: Option<Vec<String>>,
    pub edge_orbit_types: EdgeOrbitTypes,
}

pub fn analyze(g: &Graph, graph6: &str) -> AnalysisRecord {
    let report = nullity(g);
    let nut = nut_witness(g, &report);
    let kernel = (report.eta == 1).then(|| report.basis[0].iter().map(ToString::to_string).collect::<Vec<_>>());
    let is_core = core_witness(g, &report).is_some();
    let a = automorphism_group(g);
    let (p, signature) = orbits(g, &a).expect("group of this graph");

    let mut types = EdgeOrbitTypes::default();
    let signs = nut.as_ref().map(|x| edge_signatures(g, x).expect("nut kernels are full"));
    if signs.is_some() {
        types.intra_like = Some(0);
        types.intra_unlike = Some(0);
        types.inter_like = Some(0);
        types.inter_unlike = Some(0);
    }
    for orbit in p.edge_orbits() {
        let e = orbit[0];
        let intra = p.vertex_orbit_of(e.u()) == p.vertex_orbit_of(e.v());
        if intra {
            types.intra += 1;
        } else {
            types.inter += 1;
        }
        if let Some(s) = &signs {
            let like = s.signatures[g.edge_index(&e).unwrap()].class == EdgeClass::Like;
            let slot = match (intra, like) {
                (true, true) => &mut types.intra_like,
                (true, false) => &mut types.intra_unlike,
                (false, true) => &mut types.inter_like,
                (false, false) => &mut types.inter_unlike,
            };
            *slot.as_mut().unwrap() += 1;
        }
    }

    AnalysisRecord {
        schema_version: SCHEMA_VERSION,
        graph6: graph6.to_string(),
        order: g.order(),
        size: g.size(),
        degree: DegreeStats { min: g.min_degree(), avg: g.average_degree(), max: g.max_degree() },
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        nullity: report.eta,
        is_nut: nut.is_some(),
        is_core,
        signature,
        kernel,
        edge_orbit_types: types,
    }
}

pub fn table_header<W: Write>(out: &mut W) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<24} {:>4} {:>5} {:>3} {:>6} {:>3} {:>4} {:>4} {:>3} {:>4} {:>4}  omega",
        "graph6", "n", "m", "min", "avg", "max", "conn", "bip", "eta", "nut", "core"
    )
}

pub fn table_row<W: Write>(out: &mut W, r: &AnalysisRecord) -> std::io::Result<()> {
    let yn = |b: bool| if b { "yes" } else { "no" };
    writeln!(
        out,
        "{:<24} {:>4} {:>5} {:>3} {:>6.2} {:>3} {:>4} {:>4} {:>3} {:>4} {:>4}  {}",
        r.graph6,
        r.order,
        r.size,
        r.degree.min,
        r.degree.avg,
        r.degree.max,
        yn(r.connected),
        yn(r.bipartite),
        r.nullity,
        yn(r.is_nut),
        yn(r.is_core),
        r.signature
    )
}
