from decouple import config
from dotenv import load_dotenv

load_dotenv()

# upper bound on d**n candidate words scanned by the enumerators
WORK_LIMIT = config("DMAP_WORK_LIMIT", cast=int, default=2 ** 26)
