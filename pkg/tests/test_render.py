"""Tests for angcov.app.render."""

# Standard Library
import io
import xml.etree.ElementTree as ET

# Third Party
import pytest

# Local
from angcov import errors
from angcov.app import generators
from angcov.app import render as rd
from angcov.coverage import framework as fw

SVG_TAG = "{http://www.w3.org/2000/svg}svg"


#============================================
def test_instance_renders_as_svg(cross_instance):
    svg = rd.render(cross_instance)
    assert ET.fromstring(svg).tag == SVG_TAG


#============================================
def test_rendering_is_deterministic(cross_instance):
    solution = fw.iterate(cross_instance)
    first = rd.render(cross_instance, solution.selected, target_id=0)
    assert first == rd.render(cross_instance, solution.selected, target_id=0)
    assert "sensors of 4" in first


#============================================
def test_corridor_with_witness():
    instance = generators.gen("polygon-corridor", m=10, n=4, seed=2)
    solution = fw.iterate(instance)
    svg = rd.render(instance, solution.selected, target_id=instance.targets[0].id)
    assert ET.fromstring(svg).tag == SVG_TAG


#============================================
def test_render_to_a_file(cross_instance):
    buffer = io.BytesIO()
    assert rd.render(cross_instance, [0, 1], outfile=buffer) is None
    assert buffer.getvalue().startswith(b"<?xml")


#============================================
def test_missing_witness_is_only_logged(cross_instance, caplog):
    svg = rd.render(cross_instance, [0], target_id=0)
    assert ET.fromstring(svg).tag == SVG_TAG
    assert "no witness pair" in caplog.text


#============================================
def test_unknown_target(cross_instance):
    with pytest.raises(errors.BadParams):
        rd.render(cross_instance, [0, 1], target_id=5)
