"""
Orchestrator Tests
Command routing and structured success and error responses
"""

import pytest

from orchestrator import EllisOrchestrator
from reports.models import Report


@pytest.fixture
def orchestrator(small_config):
    return EllisOrchestrator(small_config)


class TestCommands:
    """Each command returns a success envelope with plain results"""

    @pytest.mark.asyncio
    async def test_classify(self, orchestrator):
        response = await orchestrator.process_command("classify", {"expr": "t^2*s1^-1"})
        assert response["success"]
        assert response["command"] == "classify"
        assert response["results"]["type"] == "pinf[k=2]"
        assert response["results"]["kind"] == "pinf"

    @pytest.mark.asyncio
    async def test_classify_zero(self, orchestrator):
        response = await orchestrator.process_command("classify", {"expr": "0"})
        assert response["results"]["type"] == "real[a=0]"
        assert response["results"]["value"] == ""

    @pytest.mark.asyncio
    async def test_decompose_quarter_turn(self, orchestrator):
        response = await orchestrator.process_command("decompose", {"matrix": "0,-1;1,2"})
        results = response["results"]
        assert (results["z"], results["alpha"], results["beta"], results["gamma"]) == \
            ("quarter", "0", "1", "2")

    @pytest.mark.asyncio
    async def test_multiplicative_product(self, orchestrator):
        params = {"left": "real[a=t^2]", "right": "pinf[k=1]", "flow": "mul"}
        results = (await orchestrator.process_command("tprod", params))["results"]
        assert results["group"] == "mul"
        assert results["symbolic"] == "pinf[k=3]"
        assert results["agree"]

    @pytest.mark.asyncio
    async def test_borel_product(self, orchestrator):
        params = {"left": "pj[k=1]", "right": "pj[k=-3]"}
        results = (await orchestrator.process_command("tprod", params))["results"]
        assert results["group"] == "borel"
        assert results["symbolic"] == results["oracle"] == "pj[k=-2]"

    @pytest.mark.asyncio
    async def test_orbit(self, orchestrator):
        results = (await orchestrator.process_command("orbit", {"bound": 0}))["results"]
        assert len(results["elements"]) == 4
        assert sum(element["in_v"] for element in results["elements"]) == 3

    @pytest.mark.asyncio
    async def test_verify_single_suite(self, orchestrator):
        results = (await orchestrator.process_command("verify", {"suite": "series"}))["results"]
        report = results["report"]
        assert isinstance(report, Report)
        assert report.suite == "series"
        assert report.exit_code() == 0


class TestErrors:
    """Engine errors come back as error envelopes"""

    @pytest.mark.asyncio
    async def test_parse_error(self, orchestrator):
        response = await orchestrator.process_command("classify", {"expr": "1 + $"})
        assert not response["success"]
        assert response["error_type"] == "ParseError"
        assert response["results"] is None

    @pytest.mark.asyncio
    async def test_mixed_product(self, orchestrator):
        params = {"left": "pj[k=1]", "right": "pinf[k=0]"}
        response = await orchestrator.process_command("tprod", params)
        assert response["error_type"] == "PreconditionError"

    @pytest.mark.asyncio
    async def test_unknown_command_and_suite(self, orchestrator):
        assert not (await orchestrator.process_command("integrate"))["success"]
        response = await orchestrator.process_command("verify", {"suite": "nope"})
        assert response["error_type"] == "PreconditionError"


class TestSuiteMerge:

    @pytest.mark.asyncio
    async def test_merged_in_order(self, orchestrator):
        report = await orchestrator.run_suites(["series", "borel"], "pair")
        assert report.suite == "pair"
        suites = [case.id.split(".")[0] for case in report.cases]
        assert suites == sorted(suites, key=["series", "borel"].index)
        assert report.summary.total == len(report.cases)
