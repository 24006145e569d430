"""Entry point for CLI when running as module: python -m arrayldpc.cli"""

from arrayldpc.cli.main import app

if __name__ == "__main__":
    app()
