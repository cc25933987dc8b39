import json
import random

import pytest

from nielsen_schreier import Alphabet, Covering, Graph, random_covering, subgroup_basis
from nielsen_schreier.cli import main
from nielsen_schreier.counterexample import theta_covering
from nielsen_schreier.serialize import (
    DocumentError,
    basis_generators_from_dict,
    basis_to_dict,
    covering_from_dict,
    covering_to_dict,
    dumps,
    graph_from_dict,
    graph_from_text,
    graph_to_dict,
    graph_to_text,
    load_graph,
)

THETA_DOC = {"rank": 2, "names": ["a", "b"], "fiber": 2, "action": [[1, 0], [1, 0]], "basepoint": 0}


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSerialization:
    def test_covering_roundtrip(self):
        rng = random.Random(0)
        for _ in range(50):
            c = random_covering(Alphabet(rng.randint(1, 3)), rng.randint(1, 6), rng, connected=False)
            assert covering_from_dict(json.loads(dumps(covering_to_dict(c)))) == c

    def test_theta_document(self):
        assert covering_from_dict(THETA_DOC) == theta_covering()
        assert covering_to_dict(theta_covering()) == THETA_DOC

    @pytest.mark.parametrize(
        "patch",
        [
            {"action": [[0, 0], [1, 0]]},
            {"action": [[1, 0]]},
            {"fiber": 0},
            {"basepoint": 2},
            {"names": ["a", "a"]},
            {"rank": "2"},
            {"action": [[1, 0], [1, 0.5]]},
        ],
    )
    def test_covering_rejects(self, patch):
        with pytest.raises(DocumentError):
            covering_from_dict(dict(THETA_DOC, **patch))

    def test_default_names(self):
        c = covering_from_dict({"rank": 2, "fiber": 1, "action": [[0], [0]]})
        assert c.alphabet.names == ("g0", "g1")

    def test_graph_formats(self):
        g = Graph(3, ((0, 1), (1, 2), (2, 2)))
        assert graph_from_text(graph_to_text(g)) == g
        assert graph_from_dict(graph_to_dict(g)) == g
        assert load_graph(dumps(graph_to_dict(g))) == load_graph(graph_to_text(g)) == g

    @pytest.mark.parametrize("text", ["edge 0 1\n", "vertices 2\nedge 0 5\n", "vertices x\n", "vertices 2\nedge 0\n"])
    def test_graph_text_rejects(self, text):
        with pytest.raises(DocumentError):
            graph_from_text(text)

    def test_basis_document(self):
        c = theta_covering()
        b = subgroup_basis(c)
        doc = json.loads(dumps(basis_to_dict(b, c)))
        assert doc["generators"] == ["aa", "ba'", "ab"]
        assert doc["tree_edges"] == [{"edge": 0, "generator": "a", "source": 0, "target": 1}]
        assert tuple(basis_generators_from_dict(doc, c.alphabet)) == b.generators


class TestBasisCommand:
    def test_theta(self, capsys, write):
        code, out, _ = run(capsys, "basis", write("t.json", THETA_DOC))
        assert code == 0
        assert "rank 3 = m(n-1)+1 = 3" in out
        assert "g0 = aa" in out and "g2 = ab" in out

    def test_structured(self, capsys, write):
        path = write("t.json", THETA_DOC)
        code, out, _ = run(capsys, "basis", "--format", "structured", path)
        assert code == 0
        doc = json.loads(out)
        assert doc["rank"] == 3 and len(doc["generators"]) == 3
        _, out2, _ = run(capsys, "basis", "--format", "structured", path)
        assert out == out2

    def test_trivial(self, capsys, write):
        doc = {"rank": 2, "names": ["a", "b"], "fiber": 1, "action": [[0], [0]], "basepoint": 0}
        code, out, _ = run(capsys, "basis", "--format", "structured", write("c.json", doc))
        assert code == 0 and json.loads(out)["generators"] == ["a", "b"]

    def test_disconnected(self, capsys, write):
        doc = {"rank": 1, "fiber": 2, "action": [[0, 1]], "basepoint": 0}
        code, out, err = run(capsys, "basis", write("c.json", doc))
        assert code == 3
        assert "[0, 1]" in out and "not connected" in err

    def test_parse_error(self, capsys, write):
        code, _, _ = run(capsys, "basis", write("c.json", "{not json"))
        assert code == 2
        code, _, _ = run(capsys, "basis", write("c.json", dict(THETA_DOC, action=[[0, 0], [1, 0]])))
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "basis", str(tmp_path / "nope.json"))
        assert code == 2

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(THETA_DOC)))
        code, out, _ = run(capsys, "basis", "-")
        assert code == 0 and "rank 3" in out


class TestMemberRewrite:
    def test_member(self, capsys, write):
        path = write("t.json", THETA_DOC)
        assert run(capsys, "member", path, "ab")[:2] == (0, "true\n")
        assert run(capsys, "member", path, "a")[:2] == (1, "false\n")

    def test_member_bad_word(self, capsys, write):
        code, _, err = run(capsys, "member", write("t.json", THETA_DOC), "ax")
        assert code == 2 and "position 1" in err

    def test_rewrite(self, capsys, write):
        code, out, _ = run(capsys, "rewrite", write("t.json", THETA_DOC), "aa")
        assert code == 0
        assert out.splitlines() == ["g0", "roundtrip: aa OK"]

    def test_rewrite_structured(self, capsys, write):
        code, out, _ = run(capsys, "rewrite", "--format", "structured", write("t.json", THETA_DOC), "ab'ab")
        doc = json.loads(out)
        assert code == 0 and doc["roundtrip_ok"] and doc["roundtrip"] == "ab'ab"

    def test_rewrite_not_member(self, capsys, write):
        code, _, _ = run(capsys, "rewrite", write("t.json", THETA_DOC), "a")
        assert code == 5


class TestOtherCommands:
    def test_rank(self, capsys, write):
        code, out, _ = run(capsys, "rank", "-n", "3", "-m", "5")
        assert code == 0 and out.strip().endswith("= 11")
        code, out, _ = run(capsys, "rank", "--format", "structured", write("t.json", THETA_DOC))
        assert json.loads(out) == {"n": 2, "m": 2, "rank": 3}
        assert run(capsys, "rank", "-n", "0", "-m", "2")[0] == 2
        assert run(capsys, "rank")[0] == 2

    def test_fold(self, capsys):
        code, out, _ = run(capsys, "fold", "--format", "structured", "--names", "a,b", "aa", "ab", "ab'")
        assert code == 0
        c = covering_from_dict(json.loads(out))
        assert c.fiber_size == 2

    def test_fold_letters(self, capsys):
        code, out, _ = run(capsys, "fold", "--format", "structured", "--rank", "3", "g0", "g1", "g2")
        assert code == 0 and json.loads(out)["fiber"] == 1

    def test_fold_infinite(self, capsys):
        code, out, _ = run(capsys, "fold", "--format", "structured", "--names", "a,b", "aba'b'")
        assert code == 6
        doc = json.loads(out)
        assert doc["exit_code"] == 6 and doc["core"]["vertices"] == 4
        code, out, _ = run(capsys, "fold", "--names", "a,b", "aba'b'")
        assert code == 6 and "core graph" in out

    def test_pi1(self, capsys, write):
        assert "rank 0" in run(capsys, "pi1", write("g.txt", "vertices 3\nedge 0 1\nedge 2 1\n"))[1]
        code, out, _ = run(capsys, "pi1", write("g.txt", "vertices 1\nedge 0 0\nedge 0 0\nedge 0 0\n"))
        assert code == 0 and out.splitlines() == ["rank 3", "generator edges: 0 1 2"]
        theta_graph = {"vertices": 2, "edges": [[0, 1], [1, 0], [0, 1], [1, 0]]}
        code, out, _ = run(capsys, "pi1", "--format", "structured", write("g.json", theta_graph))
        assert json.loads(out) == {"rank": 3, "generator_edges": [1, 2, 3], "tree_edges": [0]}

    def test_pi1_disconnected(self, capsys, write):
        assert run(capsys, "pi1", write("g.txt", "vertices 2\n"))[0] == 3

    def test_counterexample(self, capsys):
        code, out, _ = run(capsys, "counterexample")
        assert code == 0
        assert "only identity fixed" in out
        assert "m(n-1)+1 = 3" in out
        code, out, _ = run(capsys, "counterexample", "--format", "structured")
        doc = json.loads(out)
        assert doc["passed"] and all(c["passed"] for c in doc["checks"])


def test_covering_trivial_rank_zero_roundtrip():
    c = Covering.trivial(Alphabet(0))
    assert covering_from_dict(covering_to_dict(c)) == c
