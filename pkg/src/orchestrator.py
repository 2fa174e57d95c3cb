"""
Ellisflux Orchestrator
Routes engine commands to the owning modules and runs verification suites
"""

import asyncio
import logging
import os
import sys
from typing import Any, Dict, List, Optional

# Add current directory to path for relative imports
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, current_dir)
from abflows.additive import ga_product
from abflows.borel import BorelTypeJ, j_product
from abflows.multiplicative import gm_product
from config.engine import EngineConfig
from errors import EllisfluxError, PreconditionError
from interpreter.expression_parser import ExpressionParser
from interpreter.printer import format_result, format_type
from interpreter.type_dsl import TypeParser
from onetypes.classifier import classify
from oracle.scalar import FLOWS, ScalarOracle
from reports.models import Report
from reports.suites import SUITES, SuiteRunner
from sl2flow.actions import orbit
from sl2flow.matrices import decompose

COMMANDS = ("classify", "decompose", "tprod", "orbit", "verify")


class EllisOrchestrator:
    """
    Main orchestrator for Ellisflux
    Parses command inputs, dispatches to the engine and shapes structured results
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.logger = logging.getLogger(__name__)
        self.expressions = ExpressionParser(self.config)
        self.types = TypeParser(self.config)
        self.scalar = ScalarOracle(self.config)

    async def process_command(self, command: str, params: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Main entry point - run one command

        Args:
            command: one of classify, decompose, tprod, orbit, verify
            params: command parameters as parsed by the CLI

        Returns:
            {"success", "command", "results"} or {"success": False, "error", "error_type"}
        """
        params = params or {}
        try:
            self.logger.debug(f"processing {command} with {params}")
            results = await self._execute_command(command, params)
            return {"success": True, "command": command, "results": results}
        except EllisfluxError as e:
            self.logger.error(f"{command} failed: {e}")
            return {
                "success": False,
                "command": command,
                "error": str(e),
                "error_type": type(e).__name__,
                "results": None,
            }

    async def _execute_command(self, command: str, params: Dict[str, Any]) -> Dict[str, Any]:
        if command == "classify":
            return self._handle_classify(params["expr"])
        if command == "decompose":
            return self._handle_decompose(params["matrix"])
        if command == "tprod":
            return self._handle_tprod(params["left"], params["right"], params.get("flow", "add"))
        if command == "orbit":
            return self._handle_orbit(int(params.get("bound", self.config.coset_bound)))
        if command == "verify":
            return await self._handle_verify(params.get("suite", "all"))
        raise PreconditionError(f"unknown command '{command}', expected one of {COMMANDS}")

    def _handle_classify(self, text: str) -> Dict[str, Any]:
        x = self.expressions.parse_element(text)
        p = classify(x)
        return {
            "input": format_result(x),
            "type": format_type(p),
            "kind": p.kind,
            "value": "" if x.is_zero() else x.hvaluation().describe(),
        }

    def _handle_decompose(self, text: str) -> Dict[str, Any]:
        g = self.expressions.parse_matrix(text)
        parts = decompose(g, self.config.precision)
        return {
            "matrix": format_result(g),
            "z": parts.z.name.lower(),
            "alpha": format_result(parts.alpha),
            "beta": format_result(parts.beta),
            "gamma": format_result(parts.gamma),
        }

    def _handle_tprod(self, left_text: str, right_text: str, flow: str) -> Dict[str, Any]:
        left, right = self.types.parse(left_text), self.types.parse(right_text)
        if isinstance(left, BorelTypeJ) and isinstance(right, BorelTypeJ):
            symbolic = j_product(left, right)
            observed = self.scalar.borel_product(left, right)
            group = "borel"
        elif isinstance(left, BorelTypeJ) or isinstance(right, BorelTypeJ):
            raise PreconditionError("pj types multiply only with pj types")
        else:
            if flow not in FLOWS:
                raise PreconditionError(f"unknown flow '{flow}', expected one of {FLOWS}")
            symbolic = ga_product(left, right) if flow == "add" else gm_product(left, right)
            observed = self.scalar.product(left, right, flow)
            group = flow
        return {
            "group": group,
            "left": format_result(left),
            "right": format_result(right),
            "symbolic": format_result(symbolic),
            "oracle": format_result(observed),
            "agree": symbolic == observed,
        }

    def _handle_orbit(self, bound: int) -> Dict[str, Any]:
        elements = orbit(bound, transcendentals=self.config.transcendentals, horizon=self.config.horizon)
        return {
            "bound": bound,
            "elements": [{
                "normal_form": format_result(element.nf),
                "provenance": element.provenance,
                "in_v": element.in_v,
                "in_v_as_stated": element.in_v_as_stated,
            } for element in elements],
        }

    async def _handle_verify(self, selector: str) -> Dict[str, Any]:
        if selector != "all" and selector not in SUITES:
            raise PreconditionError(f"unknown suite '{selector}', expected all or one of {SUITES}")
        names: List[str] = list(SUITES) if selector == "all" else [selector]
        report = await self.run_suites(names, selector)
        return {"report": report}

    async def run_suites(self, names: List[str], label: str) -> Report:
        """Run suites concurrently; merged in the given order"""
        runner = SuiteRunner(self.config)
        parts = await asyncio.gather(*(asyncio.to_thread(runner.run, name) for name in names))
        if len(parts) == 1:
            return parts[0]
        return Report.merge(label, list(parts), self.config.echo())
