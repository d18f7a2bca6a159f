#pragma once

#define FQS_VERSION "1.0.0"
