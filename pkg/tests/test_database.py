import database


def _completion(fingerprint="ab" * 32, status="completed"):
    return {
        "fingerprint": fingerprint,
        "status": status,
        "rules": ["g^3 -> 1"],
        "stats": {"steps": 4, "compositions": 9, "added": 1},
    }


def test_completions_are_archived(tmp_path):
    db = str(tmp_path / "archive.db")
    stored = database.archive_completion(_completion(), db)
    assert stored["id"] == 1
    assert stored["created_at"]
    database.archive_completion(_completion(status="limit_exceeded"), db)
    latest = database.latest_completion("ab" * 32, db)
    assert latest["status"] == "limit_exceeded"
    assert latest["stats"]["compositions"] == 9
    assert database.latest_completion("cd" * 32, db) is None


def test_witnesses_are_archived_in_order(tmp_path):
    db = str(tmp_path / "nested" / "archive.db")
    for A in ("1 - x", "-1 + x"):
        database.archive_witness("ef" * 32, {
            "beta": [A], "A": A, "B": "1 + x", "product_zero": True, "nontrivial": True,
        }, db)
    records = database.witnesses_for("ef" * 32, db)
    assert [r["A"] for r in records] == ["1 - x", "-1 + x"]
    assert records[0]["beta"] == ["1 - x"]
    assert database.witnesses_for("00" * 32, db) == []
