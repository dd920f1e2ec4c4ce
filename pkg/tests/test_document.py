import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencilforge.document import PencilDocument, from_json, to_json
from pencilforge.errors import DocumentError
from pencilforge.realize import Pencil, Realization
import known_pencils as kp
from strategies import matrices


def test_round_trip_reference_pencil():
    doc = PencilDocument.from_realization(kp.Z2_OVER_Z1)
    text = to_json(doc)
    again = from_json(text)
    assert to_json(again) == text
    assert again.realization == kp.Z2_OVER_Z1
    assert again.variables == ("z1", "z2")


def test_field_order_and_scalar_records():
    data = json.loads(to_json(PencilDocument.from_realization(kp.Z2_OVER_Z1)))
    assert list(data) == ["format-version", "nvars", "variables", "side", "split", "flags", "coefficients",
                          "provenance"]
    assert data["coefficients"][0][2][2] == {"re_num": "1", "re_den": "4", "im_num": "0", "im_den": "1"}


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2), st.data())
def test_round_trip_is_byte_identical(side, nvars, data):
    coeffs = tuple(data.draw(matrices(side)) for _ in range(nvars + 1))
    split = data.draw(st.integers(1, side))
    R = Realization(Pencil(coeffs), split, ("random",))
    text = to_json(PencilDocument.from_realization(R))
    assert to_json(from_json(text)) == text


def _doc():
    return json.loads(to_json(PencilDocument.from_realization(kp.Z2_OVER_Z1)))


@pytest.mark.parametrize(
    "edit",
    [
        lambda d: d.pop("side"),
        lambda d: d.update({"format-version": 2}),
        lambda d: d.update({"split": 0}),
        lambda d: d["coefficients"].pop(),
        lambda d: d["coefficients"][0].pop(),
        lambda d: d["coefficients"][0][0][0].update({"re_num": "2", "re_den": "4"}),
        lambda d: d["coefficients"][0][0][0].update({"re_num": "1.5"}),
        lambda d: d["coefficients"][0][0][0].update({"re_den": "0"}),
        lambda d: d["coefficients"][0][0][0].update({"im_num": "0", "im_den": "3"}),
        lambda d: d["coefficients"][0][0][0].update({"re_num": 1}),
        lambda d: d["flags"].pop("real"),
        lambda d: d.update({"provenance": "z2/z1"}),
        lambda d: d.update({"variables": ["z1"]}),
    ],
)
def test_invalid_documents_rejected(edit):
    d = _doc()
    edit(d)
    with pytest.raises(DocumentError):
        from_json(json.dumps(d))


def test_malformed_json():
    with pytest.raises(DocumentError):
        from_json("{not json")
