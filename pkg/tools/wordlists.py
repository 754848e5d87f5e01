"""Hand-curated word lists used to build ``data/lexicon.tsv``.

Tags follow a reduced Penn Treebank set (see the tagger module). Order of
tags in an explicit entry is the rank order used by the tagger.
"""

# Closed-class words and explicit rankings; these win over generated entries.
EXPLICIT = {
    # determiners
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "that": "DT,IN", "these": "DT",
    "those": "DT", "every": "DT", "each": "DT", "some": "DT", "any": "DT", "no": "DT,UH",
    "all": "DT", "both": "DT", "either": "DT", "neither": "DT", "another": "DT",
    "what": "PRP,DT", "which": "DT", "whatever": "DT", "such": "JJ", "half": "DT,NN",
    # pronouns
    "i": "PRP", "me": "PRP", "you": "PRP", "he": "PRP", "him": "PRP", "she": "PRP",
    "her": "PRP,PRP$", "it": "PRP", "we": "PRP", "us": "PRP", "they": "PRP", "them": "PRP",
    "u": "PRP", "ya": "PRP",
    "myself": "PRP", "yourself": "PRP", "himself": "PRP", "herself": "PRP", "itself": "PRP",
    "ourselves": "PRP", "themselves": "PRP", "who": "PRP", "whom": "PRP", "whoever": "PRP",
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "its": "PRP$", "our": "PRP$", "their": "PRP$",
    "whose": "PRP$", "mine": "PRP", "yours": "PRP", "hers": "PRP", "ours": "PRP", "theirs": "PRP",
    "nobody": "NN", "nothing": "NN", "someone": "NN", "somebody": "NN", "something": "NN",
    "anyone": "NN", "anybody": "NN", "anything": "NN", "everyone": "NN", "everybody": "NN",
    "everything": "NN", "none": "NN",
    # modals and clitic modals
    "will": "MD,NN", "would": "MD", "shall": "MD", "should": "MD", "can": "MD", "cannot": "MD", "could": "MD",
    "may": "MD", "might": "MD", "must": "MD", "'ll": "MD", "'d": "MD", "wo": "MD", "ca": "MD",
    "ought": "MD", "gonna": "VBG", "wanna": "VBP",
    # negation and clitics
    "not": "RB", "n't": "RB", "never": "RB", "'s": "VBZ,OTHER", "'re": "VBP", "'m": "VBP",
    "'ve": "VBP",
    # to
    "to": "TO",
    # coordinators
    "and": "CC", "but": "CC", "or": "CC", "nor": "CC", "so": "RB,CC", "yet": "RB,CC",
    "plus": "CC",
    # subordinators and prepositions
    "in": "IN", "on": "IN", "at": "IN", "by": "IN", "with": "IN", "from": "IN", "of": "IN",
    "for": "IN", "about": "IN", "into": "IN", "onto": "IN", "upon": "IN", "after": "IN",
    "before": "IN", "during": "IN", "since": "IN", "until": "IN", "till": "IN", "through": "IN",
    "across": "IN", "against": "IN", "along": "IN", "among": "IN", "around": "IN,RB",
    "behind": "IN", "below": "IN", "beneath": "IN", "beside": "IN", "besides": "IN",
    "between": "IN", "beyond": "IN", "despite": "IN", "except": "IN", "inside": "IN",
    "near": "IN", "outside": "IN", "over": "IN,RB", "per": "IN", "than": "IN",
    "toward": "IN", "towards": "IN", "under": "IN", "underneath": "IN", "unlike": "IN",
    "via": "IN", "within": "IN", "without": "IN", "like": "IN,VB,VBP", "because": "IN",
    "if": "IN", "while": "IN", "though": "IN", "although": "IN", "whether": "IN",
    "unless": "IN", "as": "IN", "once": "RB,IN", "whereas": "IN",
    "up": "RB,IN", "out": "RB,IN", "off": "RB,IN", "down": "RB,IN", "away": "RB", "back": "RB,NN",
    # wh-adverbs and other adverbs
    "when": "RB", "where": "RB", "why": "RB", "how": "RB", "there": "RB", "here": "RB",
    "then": "RB", "now": "RB", "again": "RB", "always": "RB", "only": "RB", "ever": "RB",
    "even": "RB", "just": "RB", "really": "RB", "very": "RB", "too": "RB", "also": "RB",
    "still": "RB", "already": "RB", "soon": "RB", "later": "RB", "often": "RB",
    "sometimes": "RB", "together": "RB", "somehow": "RB", "anymore": "RB", "upstairs": "RB",
    "downstairs": "RB", "almost": "RB", "quite": "RB", "rather": "RB", "maybe": "RB",
    "perhaps": "RB", "pretty": "RB,JJ", "well": "RB,UH", "instead": "RB", "ago": "RB",
    "tonight": "RB", "today": "NN,RB", "yesterday": "NN,RB", "tomorrow": "NN,RB",
    "forward": "RB", "abroad": "RB", "else": "RB", "far": "RB", "enough": "RB,JJ",
    "anywhere": "RB", "everywhere": "RB", "somewhere": "RB", "nowhere": "RB", "home": "NN,RB",
    "more": "JJ,RB", "most": "JJ,RB", "less": "JJ,RB", "least": "JJ,RB", "much": "JJ,RB",
    "many": "JJ", "few": "JJ", "several": "JJ", "other": "JJ", "own": "JJ", "same": "JJ",
    "first": "JJ,RB", "last": "JJ,RB", "next": "JJ", "once-again": "RB", "hard": "RB,JJ",
    "late": "RB,JJ", "early": "RB,JJ", "fast": "RB,JJ", "straight": "RB,JJ", "alone": "JJ,RB",
    "long": "JJ,RB", "worse": "JJ,RB", "better": "JJ,RB", "best": "JJ,RB", "worst": "JJ",
    # interjections
    "please": "UH", "oh": "UH", "yes": "UH", "hello": "UH", "ok": "UH", "okay": "UH",
    "wow": "UH", "hey": "UH", "sorry": "JJ,UH",
    # numbers
    "one": "CD", "two": "CD", "three": "CD", "four": "CD", "five": "CD", "six": "CD",
    "seven": "CD", "eight": "CD", "nine": "CD", "ten": "CD", "eleven": "CD", "twelve": "CD",
    "twenty": "CD", "thirty": "CD", "hundred": "CD", "thousand": "CD", "million": "CD",
    # irregular noun/verb rankings that the generator cannot guess
    "help": "NN,VB,VBP", "fight": "NN,VB,VBP", "work": "NN,VB,VBP", "dance": "NN,VB,VBP",
    "copy": "NN,VB,VBP", "fault": "NN", "threat": "NN", "threats": "NNS", "sleep": "NN,VB,VBP",
    "bit": "VBD,VBN,NN", "saw": "VBD,NN", "left": "VBD,VBN,JJ", "lay": "VBD,VB,VBP",
    "found": "VBD,VBN,VB", "felt": "VBD,VBN", "drunk": "JJ,VBN", "used": "VBD,VBN,JJ",
    "married": "JJ,VBN,VBD", "scared": "JJ,VBN,VBD", "upset": "VBD,VBN,JJ,VB,VBP",
    "hurt": "VBD,VBN,VB,VBP,JJ", "broken": "VBN,JJ", "stained": "JJ,VBN",
    "blood-stained": "JJ", "angry": "JJ", "marked": "VBN,VBD,JJ", "kid": "NN",
    "fucking": "RB,JJ", "bleeding": "VBG,NN", "bruising": "NN,VBG", "stitches": "NNS,VBZ",
    "bruises": "NNS,VBZ", "keys": "NNS", "rope": "NN", "tape": "NN,VB", "strip": "NN,VB",
    "club": "NN", "self-defense": "NN", "husband-wife": "NN", "specialist": "NN",
    "standstill": "NN", "occurrence": "NN", "miscarriage": "NN", "forgiveness": "NN",
    "centimeter": "NN", "lanyard": "NN", "nylon": "NN,JJ", "roommate": "NN", "bf": "NN",
    "ex": "JJ,NN", "step": "NN,VB,VBP", "mom": "NN", "e": "NNP", "lesson": "NN", "bitch": "NN",
    "senses": "NNS", "wrists": "NNS", "feet": "NNS", "missiles": "NNS", "aim": "NN,VB,VBP",
    "occasion": "NN", "clothing": "NN", "position": "NN", "portion": "NN", "way": "NN",
    "things": "NNS", "thing": "NN", "time": "NN", "kick": "NN,VB,VBP", "punch": "VB,VBP,NN",
    "hit": "VBD,VB,VBN,VBP,NN", "beat": "VBD,VB,VBN,VBP", "cut": "VBD,VB,VBN,VBP,NN",
    "put": "VBD,VB,VBN,VBP", "let": "VB,VBD,VBN,VBP", "set": "VBD,VB,VBN,VBP",
    "run": "VB,VBP,VBN,NN", "come": "VB,VBP,VBN", "become": "VB,VBP,VBN",
    "slug": "VB,VBP,NN", "slap": "VB,VBP,NN", "push": "VB,VBP,NN", "knock": "VB,VBP,NN",
    "shove": "VB,VBP,NN", "spit": "VB,VBP,NN", "bite": "VB,VBP,NN", "attack": "NN,VB,VBP",
    "abuse": "NN,VB,VBP", "assault": "NN,VB,VBP", "rape": "NN,VB,VBP", "burn": "VB,VBP,NN",
    "stab": "VB,VBP,NN", "kill": "VB,VBP", "murder": "NN,VB,VBP", "scream": "VB,VBP,NN",
    "insult": "NN,VB,VBP", "blackmail": "NN,VB,VBP", "poison": "NN,VB,VBP",
    "threaten": "VB,VBP", "choke": "VB,VBP", "scold": "VB,VBP", "stalk": "VB,VBP",
    "control": "NN,VB,VBP", "fear": "NN,VB,VBP", "face": "NN,VB,VBP", "hand": "NN,VB,VBP",
    "head": "NN,VB,VBP", "place": "NN,VB,VBP", "point": "NN,VB,VBP", "issue": "NN,VB,VBP",
    "issues": "NNS,VBZ", "report": "VB,VBP,NN", "test": "VB,VBP,NN", "mark": "NN,VB,VBP",
    "need": "VBP,VB,NN", "love": "VBP,VB,NN", "hope": "VBP,VB,NN", "want": "VBP,VB,NN",
    "leave": "VB,VBP,NN", "care": "NN,VB,VBP", "call": "VB,VBP,NN", "phone": "NN,VB,VBP",
    "text": "NN,VB,VBP", "message": "NN,VB,VBP", "drink": "NN,VB,VBP", "smoke": "NN,VB,VBP",
    "play": "VB,VBP,NN", "look": "VB,VBP,NN", "cry": "VB,VBP,NN",
    "rest": "NN,VB,VBP", "end": "NN,VB,VBP", "start": "VB,VBP,NN", "stop": "VB,VBP,NN",
    "turn": "VB,VBP,NN", "answer": "NN,VB,VBP", "question": "NN,VB,VBP", "record": "NN,VB,VBP",
    "document": "NN,VB,VBP", "divorce": "NN,VB,VBP", "support": "NN,VB,VBP", "trust": "NN,VB,VBP",
    "promise": "NN,VB,VBP", "order": "NN,VB,VBP", "file": "NN,VB,VBP", "name": "NN,VB,VBP",
    "matter": "NN,VB,VBP", "change": "NN,VB,VBP", "visit": "NN,VB,VBP", "shock": "NN,VB,VBP",
    "damage": "NN,VB,VBP", "lock": "NN,VB,VBP", "knife": "NN", "bruise": "NN,VB,VBP",
    "cause": "NN,VB,VBP", "shout": "VB,VBP,NN", "yell": "VB,VBP,NN", "smack": "VB,VBP,NN",
    "whack": "VB,VBP,NN", "thump": "VB,VBP,NN", "bash": "VB,VBP,NN", "wallop": "VB,VBP,NN",
    "strike": "VB,VBP,NN", "menace": "VB,VBP,NN", "slam": "VB,VBP,NN", "trip": "NN,VB,VBP",
    "joke": "NN,VB,VBP", "laugh": "VB,VBP,NN", "smile": "VB,VBP,NN", "kiss": "VB,VBP,NN",
    "hug": "VB,VBP,NN", "fracture": "NN,VB,VBP", "scratch": "VB,VBP,NN", "slash": "VB,VBP,NN",
    "grab": "VB,VBP,NN", "shot": "VBD,VBN,NN", "stick": "NN,VB,VBP", "stone": "NN",
    "fist": "NN", "belt": "NN,VB,VBP", "burns": "NNS,VBZ", "cuts": "NNS,VBZ",
    "kicks": "VBZ,NNS", "punches": "VBZ,NNS", "hits": "VBZ,NNS", "slaps": "VBZ,NNS",
    "pushes": "VBZ,NNS", "bites": "VBZ,NNS", "attacks": "VBZ,NNS", "kills": "VBZ",
    "situation": "NN", "rid": "VBN,VB,JJ", "right": "JJ,RB,NN", "walk": "VB,VBP,NN",
    "burnt": "VBD,VBN,JJ", "sign": "VB,VBP,NN",
    "gets": "VBZ", "doing": "VBG", "being": "VBG", "having": "VBG",
    "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD", "been": "VBN",
    "be": "VB", "has": "VBZ", "have": "VBP,VB", "had": "VBD,VBN", "do": "VBP,VB",
    "does": "VBZ", "did": "VBD", "done": "VBN", "im": "VBP",
}

# Irregular verbs: base, past, past participle.
IRREGULAR = """
arise arose arisen
awake awoke awoken
bear bore borne
beat beat beaten
become became become
begin began begun
bend bent bent
bet bet bet
bind bound bound
bite bit bitten
bleed bled bled
blow blew blown
break broke broken
breed bred bred
bring brought brought
build built built
burst burst burst
buy bought bought
cast cast cast
catch caught caught
choose chose chosen
cling clung clung
come came come
cost cost cost
creep crept crept
cut cut cut
deal dealt dealt
dig dug dug
draw drew drawn
drink drank drunk
drive drove driven
eat ate eaten
fall fell fallen
feed fed fed
feel felt felt
fight fought fought
find found found
flee fled fled
fling flung flung
fly flew flown
forbid forbade forbidden
forget forgot forgotten
forgive forgave forgiven
freeze froze frozen
get got gotten
give gave given
go went gone
grind ground ground
grow grew grown
hang hung hung
hear heard heard
hide hid hidden
hit hit hit
hold held held
hurt hurt hurt
keep kept kept
kneel knelt knelt
know knew known
lay laid laid
lead led led
leave left left
lend lent lent
let let let
lie lay lain
mislead misled misled
strive strove striven
swell swelled swollen
undo undid undone
light lit lit
lose lost lost
make made made
mean meant meant
meet met met
mistake mistook mistaken
overcome overcame overcome
pay paid paid
put put put
quit quit quit
read read read
ride rode ridden
ring rang rung
rise rose risen
run ran run
say said said
see saw seen
seek sought sought
sell sold sold
send sent sent
set set set
shake shook shaken
shed shed shed
shine shone shone
shoot shot shot
show showed shown
shrink shrank shrunk
shut shut shut
sing sang sung
sink sank sunk
sit sat sat
slay slew slain
sleep slept slept
slide slid slid
sling slung slung
slit slit slit
speak spoke spoken
speed sped sped
spend spent spent
spin spun spun
spit spat spat
split split split
spread spread spread
spring sprang sprung
stand stood stood
steal stole stolen
stick stuck stuck
sting stung stung
stink stank stunk
stride strode stridden
strike struck struck
string strung strung
swear swore sworn
sweep swept swept
swing swung swung
swim swam swum
take took taken
teach taught taught
tear tore torn
tell told told
think thought thought
throw threw thrown
thrust thrust thrust
tread trod trodden
understand understood understood
undergo underwent undergone
upset upset upset
wake woke woken
wear wore worn
weave wove woven
weep wept wept
win won won
wind wound wound
withdraw withdrew withdrawn
wring wrung wrung
write wrote written
"""

REGULAR_VERBS = """
abandon abduct abuse accept accuse add admit agree allow annoy answer apologize appear argue arrange
arrest arrive ask attach assault attack attempt avoid bake ban bang bark bash batter beg behave believe
belong berate blackmail blame block boil bother bounce breathe bruise brush burn call calm care carry
cause change chase cheat check chew chide choke clean clobber close collect complain confess
continue control cook copy cough count cover crash crawl cry damage dance decide defend delay demand
deny depend describe destroy die disappear dislike divorce document drag drop drown duck earn
embarrass end enjoy enter escalate escape explain extort face fail fear file fill finish fix flip
follow force fracture frighten gasp glare grab grip guess hammer hand handle happen harass hate head
heal help hope hug humiliate hunt hurry ignore imagine injure insult intend intimidate invite jail
join joke jump kick kidnap kill kiss knock laugh learn lick like limit listen live lock look love
manage mark marry matter menace mention miss mock molest move murder need neglect notice obey occur
offer open order own pack pass pause phone pick place plan play please poison pour pray prefer prepare
press pretend prevent promise protect provide pull pummel punch punish push rape reach realize receive
record refuse regret relax remain remember remove repeat reply report rescue rest return roll rub
rush save scald scar scare scold scratch scream search seem serve settle shock shout shove slam slap
slaughter slash slip slug smack smash smell smile smoke snap sob stab stalk stare start starve stay
step stitch stop strangle struggle suffer suggest support suppose surprise survive suspect swallow
talk taste taunt tease terrify test thank thrash threaten throttle thump tickle tie torture touch
trap travel treat trip trust try turn twist untie use visit vomit wait walk wallop want warn wash
watch whack wipe wish wonder work worry yell tape question name text message drink visit bruise
cheat stitch lock scar choke belt kick shoot hurt ring point issue test drag lie place
escalate faint beg bully cuff grope harm injure isolate maim manipulate rob squeeze suffocate
burglarize confine detain sign kidnap pinch shake slap smother spank stomp strangle strike whip wound
"""

# One-syllable verbs are handled by rule; these longer ones also double.
DOUBLING_EXTRA = {"admit", "commit", "occur", "prefer", "regret", "control", "refer", "permit", "omit", "patrol", "equip"}
NO_DOUBLE = {"open", "visit", "happen", "offer", "enter", "suffer", "answer", "wonder", "order", "bother", "listen",
             "abandon", "poison", "threaten", "frighten", "murder", "hammer", "pummel", "wallop", "travel",
             "cancel", "limit", "blackmail", "ban"}
FORCE_DOUBLE = {"ban"}

NOUNS = """
husband wife home day help uncle mom mother father dad brother sister son daughter child kid
family boyfriend girlfriend partner roommate friend man woman girl boy thing food situation head
stitch knife time morning occasion missile aim bowl centimeter eye work clothing blood cloth hand
argument forgiveness club dance garage rope tape foot mouth room hour water ground sense wrist lesson
bitch fault violence occurrence relationship finger specialist body face bruise jaw standstill year
way police key copy house bedroom lanyard portion top leg stomach miscarriage position back shirt bed
sleep issue point phone money door floor wall table kitchen night week month hospital lawyer doctor
neighbor car street city village school job office life baby marriage dowry drug alcohol beer gun
injury pain arm neck hair throat chest nose lip tooth ear belt stick stone fist threat abuse assault
attack control anger fear support safety shelter name address number message text parent
grandmother grandfather aunt cousin nephew niece fiance fiancee ex-husband ex-wife in-law officer
station court case divorce custody order report record document photo picture evidence witness
neighbour landlord employer boss colleague teacher nurse ambulance emergency danger risk problem
trouble question answer reason fact idea word story truth lie mistake chance choice right law
rule sign mark scar burn cut wound blood injury bone rib skull lung heart skin knee ankle shoulder
elbow hip back foot toe thumb cheek chin forehead temple belly breast bottom chair sofa couch bag
box cup glass plate pan pot bottle can hammer bat iron cable cord wire chain lock window stair step
corner yard garden road bus train taxi shop market mall church mosque temple park field river
place town country world government system service level crime case punishment court jail prison
party wedding dinner lunch breakfast meal tea coffee milk rice bread cigarette drink smoke weekend
hour minute second moment evening afternoon night midnight noon winter summer season holiday birthday
anniversary kid teenager adult person people folk group gang member stranger enemy victim abuser
perpetrator attacker rapist killer husband-wife self-defense nylon fight slap kick punch push hit
bite rape murder poison threat insult scream shout yell cry tear sob voice noise sound silence
mood temper rage jealousy control power money debt loan salary income rent bill payment account card
stuff thing something nothing everything anything information help advice counseling therapy paper photo stair
"""

IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "foot": "feet", "tooth": "teeth",
    "person": "people", "knife": "knives", "wife": "wives", "life": "lives", "mouse": "mice",
    "shelf": "shelves", "half": "halves", "self": "selves", "wolf": "wolves", "leaf": "leaves",
}
UNCOUNTABLE = {"help", "food", "water", "blood", "clothing", "forgiveness", "violence", "police",
               "money", "anger", "fear", "safety", "pain", "abuse", "support", "evidence", "advice",
               "information", "stuff", "dowry", "alcohol", "rice", "bread", "milk", "tea", "coffee",
               "jealousy", "rage", "silence", "power", "self-defense", "nylon", "counseling", "therapy",
               "custody", "punishment", "people", "folk", "sleep", "work", "home", "trouble"}

ADJECTIVES = """
drunk angry little regular serious spare fragile thick black private stupid scared young married
physical sorry flat good bad big small old new short afraid safe dead alive sure happy sad bloody
red blue white dark heavy possible able real true whole sore swollen violent abusive aggressive
jealous mad terrible awful horrible hot cold wet dry weak strong sick ill pregnant poor rich free
nice kind cruel mean rude calm quiet loud busy tired hungry thirsty lonely helpless hopeless desperate
worried nervous anxious terrified frightened upset ashamed embarrassed depressed confused lost
dangerous painful serious severe minor major bruised broken injured hurt wounded unconscious
emotional mental verbal sexual financial legal medical local nearby main only certain clear common
normal strange weird crazy fine okay great important public single whole open closed full empty
easy difficult hard simple fair unfair wrong right best worst least last next previous whole
several various entire own brown green yellow grey gray pink purple golden wooden plastic metal
fragile multiple extra usual constant daily weekly monthly physical drunken sober high low deep
"""

ADVERBS = """
properly regularly successfully finally repeatedly suddenly immediately seriously badly nearly
really actually usually constantly daily weekly recently lately probably possibly certainly
clearly simply easily quickly slowly quietly loudly violently angrily harshly brutally severely
physically verbally sexually emotionally mentally financially completely totally fully entirely
barely hardly merely mostly partly truly deeply hardly gently softly rarely frequently often
sometimes always never twice once continuously eventually afterwards afterward meanwhile otherwise
especially particularly exactly approximately almost nearly only apparently obviously honestly
literally basically generally normally happily sadly luckily unfortunately thankfully hopefully
"""
