"""CLI entry point: python -m bcall"""

from bcall.cli.main import app

if __name__ == "__main__":
    app()
