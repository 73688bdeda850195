use rogers_eqn_core::chords::Chord;
use rogers_eqn_core::coords::CoordMap;
use rogers_eqn_core::reduction::{Certificate, Rational};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub type ChordJson = [usize; 2];

pub fn chord(c: &Chord) -> ChordJson {
    let (i, j) = c.endpoints();
    [i, j]
}

pub fn chords<'a>(cs: impl IntoIterator<Item = &'a Chord>) -> Vec<ChordJson> {
    cs.into_iter().map(chord).collect()
}

pub fn rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Coordinates keyed by `"i,j"`, in chord order.
pub struct CoordsJson(Vec<(String, f64)>);

impl From<&CoordMap> for CoordsJson {
    fn from(m: &CoordMap) -> Self {
        CoordsJson(
            m.iter()
                .map(|(c, u)| (format!("{},{}", c.i(), c.j()), u))
                .collect(),
        )
    }
}

impl Serialize for CoordsJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
pub struct ChordEntry {
    pub chord: ChordJson,
    pub crossing: Vec<ChordJson>,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub margin: f64,
    #[serde(rename = "constant_L1")]
    pub constant_l1: String,
    pub max_residual: f64,
    pub worst_sample: usize,
    pub max_chord_residual: f64,
    pub worst_chord_sample: usize,
    pub passed: bool,
    pub worst_config: CoordsJson,
}

#[derive(Serialize)]
pub struct Term<S> {
    pub symbol: S,
    pub coefficient: i64,
}

#[derive(Serialize)]
pub struct WedgeJson {
    pub n: usize,
    pub zero: bool,
    pub terms: Vec<Term<[ChordJson; 2]>>,
}

#[derive(Serialize)]
pub struct PieceJson {
    pub vertices: Vec<usize>,
    pub size: usize,
    pub chords: Vec<ChordJson>,
}

#[derive(Serialize)]
pub struct ResidualJson {
    pub chord: ChordJson,
    pub partners: Vec<ChordJson>,
}

#[derive(Serialize)]
pub struct DegenerateJson {
    pub n: usize,
    pub chord: ChordJson,
    pub forced_one: Vec<ChordJson>,
    pub sizes: [usize; 2],
    pub pieces: Vec<PieceJson>,
    pub residual_relations: Vec<ResidualJson>,
    pub reflection: bool,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub n: usize,
    pub case: &'static str,
    pub instances: Vec<InstanceJson>,
    pub expansion_ok: bool,
}

#[derive(Serialize)]
pub struct InstanceJson {
    pub sign: i64,
    pub kind: &'static str,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub terms: Vec<TermJson>,
    #[serde(rename = "constant_L1")]
    pub constant_l1: String,
}

#[derive(Serialize)]
pub struct TermJson {
    pub blocks: [Vec<usize>; 2],
    pub chords: Vec<ChordJson>,
}

impl CertificateJson {
    pub fn new(cert: &Certificate, expansion_ok: bool) -> Self {
        let instances = cert
            .instances()
            .iter()
            .map(|s| InstanceJson {
                sign: s.sign,
                kind: s.instance.kind().as_str(),
                j: s.instance.forgotten().to_vec(),
                terms: s
                    .instance
                    .terms()
                    .iter()
                    .map(|t| TermJson {
                        blocks: [
                            t.chord.a().indices().to_vec(),
                            t.chord.b().indices().to_vec(),
                        ],
                        chords: chords(t.symbol.chords()),
                    })
                    .collect(),
                constant_l1: rational(s.instance.constant()),
            })
            .collect();
        CertificateJson {
            n: cert.n(),
            case: cert.case().as_str(),
            instances,
            expansion_ok,
        }
    }
}
