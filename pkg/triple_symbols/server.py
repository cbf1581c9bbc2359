"""
Tool registry
Registers the triple symbol tools and executes them by name
"""
import logging
import time
from typing import Any, Dict, List, Optional

from .config import Config
from .errors import InternalInvariantViolation, PartialOrbit, TripleSymbolError
from .tools import SymbolTools

logger = logging.getLogger(__name__)


class SymbolServer:
    """Named-tool dispatcher used by the CLI and the MCP stdio server"""

    def __init__(self, settings: Optional[Config] = None):
        self.tools_registry: Dict[str, Dict[str, Any]] = {}
        self.execution_count = 0

        for tool in SymbolTools(settings).get_tools():
            self.register_tool(tool)
        logger.debug(f"Registered {len(self.tools_registry)} tools")

    def register_tool(self, tool: Dict[str, Any]):
        """Register a new tool"""
        tool_name = tool.get('name')
        if not tool_name:
            raise ValueError("Tool must have a name")
        self.tools_registry[tool_name] = tool

    def list_tools(self) -> List[Dict[str, Any]]:
        """List all available tools"""
        # handlers are not JSON serializable
        return [
            {
                'name': tool.get('name'),
                'description': tool.get('description'),
                'parameters': tool.get('parameters', {}),
            }
            for tool in self.tools_registry.values()
        ]

    def get_tool(self, tool_name: str) -> Optional[Dict[str, Any]]:
        return self.tools_registry.get(tool_name)

    def execute_tool(self, tool_name: str, parameters: Dict[str, Any]) -> Dict[str, Any]:
        """Execute a tool with given parameters"""
        if tool_name not in self.tools_registry:
            raise ValueError(f"Tool '{tool_name}' not found")

        handler = self.tools_registry[tool_name]['handler']
        start_time = time.time()
        try:
            result = handler(parameters)
        except TripleSymbolError as e:
            log = logger.error if isinstance(e, InternalInvariantViolation) else logger.warning
            log(f"Tool '{tool_name}' failed: {e}")
            failure = {
                'success': False,
                'tool': tool_name,
                'error': str(e),
                'error_name': e.error_name,
                'exit_code': e.exit_code,
            }
            if isinstance(e, PartialOrbit):
                failure['available'] = e.available
            return failure

        execution_time = time.time() - start_time
        self.execution_count += 1
        logger.info(f"Tool '{tool_name}' executed in {execution_time:.3f}s")
        return {
            'success': True,
            'tool': tool_name,
            'result': result,
            'execution_time': execution_time,
        }
