from importlib import resources

from ringlab.corpus import default_rings, digest, load_corpus, write_default_corpus
from ringlab.ring import serialize_ring


def test_shipped_files_match_builders():
    root = resources.files("ringlab") / "corpus"
    shipped = {p.name: p.read_text() for p in root.iterdir() if p.name.endswith(".ring")}
    built = {name: serialize_ring(R) for name, R in default_rings()}
    assert shipped == built


def test_default_corpus_contents(corpus_entries):
    assert len(corpus_entries) == 15
    assert all(e.ok for e in corpus_entries)
    names = {e.ring.name for e in corpus_entries}
    assert names == {"Z2", "Z3", "Z4", "Z6", "Z8", "Z12", "GF4", "Z2xZ2", "T2(Z2)", "T3(Z2)",
                     "M2(Z2)", "M2(Z4)", "S(Ex2.6)", "Triv(Z2)", "SU3(Z2)"}
    orders = {e.ring.name: e.ring.order for e in corpus_entries}
    assert orders["M2(Z4)"] == 256 and orders["S(Ex2.6)"] == 16 and orders["T3(Z2)"] == 64


def test_written_corpus_has_same_digest(tmp_path, corpus_entries):
    write_default_corpus(tmp_path)
    again = load_corpus(tmp_path)
    assert digest(again) == digest(corpus_entries)


def test_digest_changes_with_content(tmp_path, corpus_entries):
    write_default_corpus(tmp_path)
    p = tmp_path / "z2.ring"
    p.write_text(p.read_text().replace("ring Z2", "ring Z2b"))
    assert digest(load_corpus(tmp_path)) != digest(corpus_entries)
