"""Regenerate the shipped acceptance manifest from the current build.

Run after reviewing every output by hand; the manifest is a golden file.
"""
import json

from rigidkit.cli import DATA, record_manifest

KL3 = json.dumps({
    "genus": 0, "dim_dual": 8, "h0": 0,
    "profiles": [
        {"dim": 8, "inv": 2, "slopes": [["0", 8]]},
        {"dim": 8, "inv": 0, "slopes": [["1/3", 6], ["0", 2]]},
    ],
})

ENTRIES = [
    ("1 G2 tuple, place 0", ["parahoric", "--type", "G2", "--keep", "0,1"]),
    ("1 G2 tuple, place 1", ["parahoric", "--type", "G2", "--keep", "0"]),
    ("1 G2 tuple, place 2", ["parahoric", "--type", "G2", "--keep", "1"]),
    ("1 F4 tuple, place 0", ["parahoric", "--type", "F4", "--remove", "1"]),
    ("1 F4 tuple, place 1", ["parahoric", "--type", "F4", "--remove", "2"]),
    ("1 F4 tuple, place 2", ["parahoric", "--type", "F4", "--keep", "1,3,4"]),
    ("1 E8 tuple, place 0", ["parahoric", "--type", "E8", "--remove", "1"]),
    ("1 E8 tuple, place 1", ["parahoric", "--type", "E8", "--remove", "2"]),
    ("1 E8 tuple, place 2", ["parahoric", "--type", "E8", "--remove", "5"]),
    ("1 G2 search", ["rigidity-search", "--type", "G2", "--places", "3", "--tsv"]),
    ("2 G2 platonic A1xA1", ["platonic", "--type", "G2", "--keep", "0,1"]),
    ("2 G2 platonic A1xT1", ["platonic", "--type", "G2", "--keep", "0"]),
    ("2 F4 platonic C3xA1", ["platonic", "--type", "F4", "--keep", "0,2,3,4"]),
    ("2 F4 platonic A2xA2", ["platonic", "--type", "F4", "--keep", "0,1,3,4"]),
    ("2 F4 platonic A2xA1xT1", ["platonic", "--type", "F4", "--keep", "1,3,4"]),
    ("2 E8 platonic D8", ["platonic", "--type", "E8", "--remove", "1"]),
    ("2 E8 platonic A8", ["platonic", "--type", "E8", "--remove", "2"]),
    ("2 E8 platonic A4xA4", ["platonic", "--type", "E8", "--remove", "5"]),
    ("3 E7 -> A7", ["classify", "--type", "E7", "--remove", "2"]),
    ("3 D8 -> D4xD4", ["classify", "--type", "D8", "--remove", "4"]),
    ("3 C4 -> A3xT1", ["parahoric", "--type", "C4", "--remove", "0,4", "--json"]),
    ("3 B4 -> B2xD2", ["classify", "--type", "B4", "--remove", "2"]),
    ("4 MP A1 Iwahori", ["mp", "--type", "A1", "--keep", ""]),
    ("4 MP E6", ["mp", "--type", "E6", "--remove", "4", "--tsv"]),
    ("5 Kl2(3;1)", ["kloosterman", "--n", "2", "--p", "3", "--a", "1"]),
    ("5 Kl2(5;1)", ["kloosterman", "--n", "2", "--p", "5", "--a", "1", "--json"]),
    ("5 moduli oracle", ["kloosterman", "--n", "3", "--p", "7", "--a", "6", "--via-moduli"]),
    ("5 direct sum", ["kloosterman", "--n", "3", "--p", "7", "--a", "1"]),
    ("5 Weil n=3 p=13", ["weil", "--n", "3", "--p", "13"]),
    ("6 A1 length", ["affine", "length", "--type", "A1", "--translation", "1"]),
    ("6 A1 invset", ["affine", "invset", "--type", "A1", "--translation", "1"]),
    ("6 G2 irrelevant", ["affine", "relevant", "--type", "G2", "--word", "0,1,2"]),
    ("7 Kl3 rigidity", ["conductor", "check", "--instance", KL3]),
    ("7 Kl standard swan", ["conductor", "swan", "--profile",
                            '{"dim": 4, "inv": 0, "slopes": [["1/4", 4]]}']),
    ("8 S3 rigid", ["rigid-tuple", "--group", "S3", "--classes", "2A,2A,3A"]),
    ("8 A5 rigid", ["rigid-tuple", "--group", "A5", "--classes", "2A,3A,5A"]),
    ("8 A4 not rigid", ["rigid-tuple", "--group", "A4", "--classes", "2A,2A,2A"]),
    ("8 A5 classes", ["group", "classes", "--group", "A5", "--tsv"]),
    ("9 generic", ["genericity", "--exponents", "1,1,1", "--q", "7"]),
    ("9 not generic", ["genericity", "--exponents", "1,1,2", "--q", "7"]),
    ("9 parity", ["central-char", "--exponents", "1,1,2", "--q", "7"]),
    ("10 kl map", ["trunc-check", "--map", "kl", "--p", "5", "--N", "3", "--pairs", "500"]),
    ("10 airy map", ["trunc-check", "--map", "airy", "--p", "5", "--N", "3", "--pairs", "500"]),
    ("exit 1 on domain error", ["kloosterman", "--n", "2", "--p", "9", "--a", "1"]),
]

if __name__ == "__main__":
    record_manifest([{"name": n, "argv": a} for n, a in ENTRIES], DATA / "acceptance_manifest.json")
