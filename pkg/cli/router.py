import argparse
from dataclasses import dataclass, field
from typing import Callable, List, Sequence

from cli.io import LA2ArgumentParser, OutputDocument

Handler = Callable[[argparse.Namespace], OutputDocument]
Configure = Callable[[argparse.ArgumentParser], None]


@dataclass
class Command:
    name: str
    help: str
    handler: Handler
    arguments: Sequence[Configure] = field(default_factory=tuple)


class CommandRouter:
    """Collects subcommands from the command modules, like an API router collects endpoints"""

    def __init__(self):
        self.commands: List[Command] = []

    def command(self, name: str, help: str, arguments: Sequence[Configure] = ()) -> Callable[[Handler], Handler]:
        def decorator(handler: Handler) -> Handler:
            self.commands.append(Command(name=name, help=help, handler=handler, arguments=arguments))
            return handler
        return decorator

    def include_router(self, other: "CommandRouter") -> None:
        self.commands.extend(other.commands)

    def build_parser(self, prog: str, description: str) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
        common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

        parser = LA2ArgumentParser(prog=prog, description=description)
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
        for command in self.commands:
            sub = subparsers.add_parser(command.name, help=command.help, parents=[common])
            for configure in command.arguments:
                configure(sub)
            sub.set_defaults(handler=command.handler)
        return parser
