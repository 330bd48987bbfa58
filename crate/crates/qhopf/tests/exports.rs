//! Exported documents of the catalog and of its doubles are frozen by digest.

use sha2::{Digest, Sha256};

use qhopf::double::build_double;
use qhopf::workbench::{catalog, export, import};
use qhopf::Gaussian;

const FROZEN: [(&str, &str, &str); 4] = [
    (
        "H2",
        "f16c34d8d1b6a710a0cd23a9321470ff0e05ee4441c57db92686c39479d58300",
        "47b0a75136f1e8444cb79fe81bc3e1231df1a130d8c8ba41076074c500257534",
    ),
    (
        "H8+",
        "3c0c639a2652787a9dec726fc1cd465e624ace74c1d5ac13d8d796509d0a65f2",
        "519c297853e0b6d9124a0f5da8e937d93c1f907346c4153bb7283c289695e585",
    ),
    (
        "H8-",
        "26da0b3d431ab5c98cecff0a94fa41e16365ffd335eddc95bc9ca28a67795fb8",
        "5c66b469d7458ae5a6511f85378e7ffa9e95b00b8257e3d1abc0877218a7f90c",
    ),
    (
        "kZ2-hopf",
        "d3a82895bbfb993018e2ae88da9c280e43f788d015744d9ff89a06bfa262b533",
        "2a43e029b4bb959f310fa5c773ac3897a00ae943a1289b83deac8832aaa9a9e6",
    ),
];

fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

#[test]
fn catalog_documents_are_frozen() {
    for (name, doc, _) in FROZEN {
        let h = catalog::build(name).unwrap();
        assert_eq!(digest(&export(&h)), doc, "{name}");
    }
}

#[test]
fn double_documents_are_frozen() {
    for (name, _, double_doc) in FROZEN {
        let d = build_double(&catalog::build(name).unwrap()).unwrap();
        let text = export(&d.presentation);
        assert_eq!(digest(&text), double_doc, "D({name})");
        if d.presentation.dim() <= 4 {
            let back = import::<Gaussian>(&text).unwrap();
            assert_eq!(export(&back), text);
        }
    }
}
