import json
import logging
import os
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from cpmackey.utils import JobAwareLogFormatter, init_settings

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
    "run_configs",
    "default.json",
)


class LogsConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    log_dir: Optional[str] = Field(
        default=None,
        description="Directory for a log file copy; stderr only when unset",
    )
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="INFO", description="Logging level"
    )
    samples_dir: str = Field(
        default="periodicity_samples",
        description="Sub directory of the report location for per-sample JSON Lines",
    )
    job_log_formatter: Optional[JobAwareLogFormatter] = Field(
        default=None,
        description="Job aware log formatter which prepends the current job label to every log message",
    )

    @property
    def job(self) -> str:
        return self.job_log_formatter.job if self.job_log_formatter else ""

    @job.setter
    def job(self, job: str):
        if self.job_log_formatter:
            self.job_log_formatter.job = job

    def init_formatter(self):
        self.job_log_formatter = init_settings(
            log_level=self.log_level, logs_dir=self.log_dir
        )


class RandomDefaults(BaseModel):
    max_free: int = Field(default=2, ge=0, description="Bound on free summands of random functors")
    max_rel: int = Field(default=2, ge=0, description="Bound on relations of random functors")
    coef_bound: int = Field(default=9, ge=0, description="Bound on random coefficients")


class RunConfig(BaseModel):
    prune_resolutions: bool = Field(
        default=True, description="Prune every kernel before covering it"
    )
    cover_strategy: Literal["minimal", "levelwise"] = Field(
        default="minimal", description="How free covers choose their summands"
    )
    random: RandomDefaults = Field(
        default_factory=RandomDefaults, description="Defaults for random generation"
    )
    periodicity_workers: int = Field(
        default=1, ge=1, description="Processes used by the periodicity runner"
    )
    periodicity_functor: Literal["ext", "tor"] = Field(
        default="ext", description="Derived functor compared by the periodicity runner"
    )


class AppConfig(BaseModel):
    logs: LogsConfig = Field(
        default_factory=LogsConfig, description="Configuration for logging"
    )
    run_config: RunConfig = Field(
        default_factory=RunConfig,
        description="Configuration for resolutions, random generation and experiments",
    )


def read_json_config(config_path: Optional[str] = None, init_logging: bool = True) -> AppConfig:
    config_path = config_path or os.getenv("CONFIG_PATH") or DEFAULT_CONFIG_PATH
    if config_path == DEFAULT_CONFIG_PATH and not os.path.exists(config_path):
        # installed without the run_configs directory
        json_data = {}
    else:
        with open(config_path, "r") as f:
            json_data = json.load(f)
    app_config = AppConfig.model_validate(json_data)
    if init_logging:
        app_config.logs.init_formatter()
    logger.info(f"Read app config from {config_path}")
    return app_config
