import os
import sys

from dotenv import load_dotenv

# Load .env explicitly
load_dotenv()

# Add project root to path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from matlc.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
