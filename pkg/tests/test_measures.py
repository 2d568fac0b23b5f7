"""Scales, normalization, inverse mapping, and the measure text syntax."""

import pytest

from ontrust.errors import InvalidMeasure
from ontrust.measures import (
    LMH,
    PERCENT,
    MeasureValue,
    Scale,
    format_measure,
    normalize,
    parse_measure,
    to_scale,
)


def test_continuous_normalization_endpoints():
    assert normalize(MeasureValue(PERCENT, 100.0)) == 1.0
    assert normalize(MeasureValue(PERCENT, 0.0)) == 0.0
    assert normalize(MeasureValue(PERCENT, 85.0)) == pytest.approx(0.85)


def test_ordinal_normalization():
    # (i+1)/(k+1): no label reaches 0 or 1
    assert normalize(MeasureValue(LMH, "Low")) == 0.25
    assert normalize(MeasureValue(LMH, "Medium")) == 0.5
    assert normalize(MeasureValue(LMH, "High")) == 0.75


def test_normalization_monotone_on_larger_ordinal():
    scale = Scale.ordinal(("a", "b", "c", "d", "e"))
    values = [normalize(MeasureValue(scale, label)) for label in scale.labels]
    assert values == sorted(values)
    assert 0 < values[0] and values[-1] < 1


def test_invalid_values_rejected():
    with pytest.raises(InvalidMeasure):
        MeasureValue(LMH, "Huge")
    with pytest.raises(InvalidMeasure):
        MeasureValue(PERCENT, 101.0)
    with pytest.raises(InvalidMeasure):
        Scale.continuous(5, 5)
    with pytest.raises(InvalidMeasure):
        Scale.ordinal(("only",))


def test_to_scale_ordinal_nearest_with_ties_up():
    assert to_scale(0.74, LMH).raw == "High"
    assert to_scale(0.3, LMH).raw == "Low"
    # 0.375 is equidistant between Low (0.25) and Medium (0.5)
    assert to_scale(0.375, LMH).raw == "Medium"


def test_to_scale_continuous_roundtrip():
    value = to_scale(0.85, PERCENT)
    assert value.raw == pytest.approx(85.0)
    assert normalize(value) == pytest.approx(0.85)


def test_parse_and_format_named_scales():
    assert parse_measure("lmh:High") == MeasureValue(LMH, "High")
    assert parse_measure("0-100:85") == MeasureValue(PERCENT, 85.0)
    assert format_measure(MeasureValue(LMH, "High")) == "lmh:High"
    assert format_measure(MeasureValue(PERCENT, 85.0)) == "0-100:85"


def test_parse_and_format_general_scales():
    ord_value = parse_measure("ord[A|B|C]:B")
    assert ord_value.scale.labels == ("A", "B", "C") and ord_value.raw == "B"
    cont_value = parse_measure("cont[0,10]:2.5")
    assert cont_value.raw == 2.5
    for text in ("ord[A|B|C]:B", "cont[0,10]:2.5"):
        assert format_measure(parse_measure(text)) == text


def test_parse_errors_carry_line():
    with pytest.raises(InvalidMeasure) as exc:
        parse_measure("lmh:Huge", line=7)
    assert exc.value.line == 7
    with pytest.raises(InvalidMeasure):
        parse_measure("nonsense")
    with pytest.raises(InvalidMeasure):
        parse_measure("0-100:notanumber")
