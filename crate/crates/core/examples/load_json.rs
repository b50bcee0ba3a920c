//! Read a complex from JSON, check it, and export a stress basis.

use gspheres::stress;
use gspheres::{io, verify};

const OCTAHEDRON: &str = r#"{
  "name": "octahedron",
  "facets": [[1,3,5],[1,3,6],[1,4,5],[1,4,6],[2,3,5],[2,3,6],[2,4,5],[2,4,6]],
  "coordinates": {
    "1": ["1", "0", "0"], "2": ["-1", "0", "0"],
    "3": ["0", "1", "0"], "4": ["0", "-1", "0"],
    "5": ["0", "0", "1"], "6": ["0", "0", "-1"]
  }
}"#;

fn main() -> gspheres::Result<()> {
    let s = io::load(OCTAHEDRON)?;
    let report = verify::verify_sphere(&s, &verify::Options::default())?;
    println!(
        "{}: {} checks, status {}",
        report.target,
        report.checks.len(),
        report.status
    );

    let e = s.natural_coords.as_ref().expect("file has coordinates");
    let b = stress::stress_space(&s.complex, e, 1)?;
    let file = io::stress_basis_file(&b);
    println!(
        "{}",
        serde_json::to_string_pretty(&file).expect("serializable")
    );
    Ok(())
}
